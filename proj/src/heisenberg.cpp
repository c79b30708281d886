#include "abelcy/heisenberg.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace abelcy {

namespace {
int mod(int a, int m) { return ((a % m) + m) % m; }
}

GroupElement GroupElement::normalized(int d, int a, int b, int c, int e) {
    GroupElement g;
    g.d = d;
    g.a = mod(a, d);
    g.b = mod(b, d);
    g.c = mod(c, 2);
    g.e = mod(e, d);
    return g;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (d != o.d) throw LevelMismatch();
    // this = s^a t^b i^c xi^e applied after o = s^a' t^b' i^c' xi^e'.
    // Move i^c across o's sigma/tau part: i s^a' t^b' = s^-a' t^-b' i,
    // then t^b s^±a' = xi^{±a' b} s^±a' t^b.
    int a2 = c ? -o.a : o.a;
    int b2 = c ? -o.b : o.b;
    int phase = a2 * b;
    return normalized(d, a + a2, b + b2, c + o.c, e + o.e + phase);
}

std::string GroupElement::format() const {
    std::string s;
    if (e) s += "xi^" + std::to_string(e) + "*";
    if (a) s += "s^" + std::to_string(a);
    if (b) s += (s.empty() || s.back() == '*' ? "" : " ") + std::string("t^") + std::to_string(b);
    if (c) s += (s.empty() || s.back() == '*' ? "" : " ") + std::string("i");
    return s.empty() ? "1" : s;
}

HeisenbergAction::HeisenbergAction(RingPtr ring, int d, int offset)
    : ring_(std::move(ring)), d_(d), offset_(offset) {
    if (d < 1 || offset < 0 || offset + d > ring_->nvars()) throw LevelMismatch();
}

Scalar HeisenbergAction::xi_pow(long long k) const {
    const Field& F = ring_->field();
    int m = mod((int)(k % d_), d_);
    if (m == 0) return F.one();
    if (F.is_prime_field()) {
        if (xi_table_.empty()) {
            Scalar xi = F.root_of_unity((uint64_t)d_);  // throws NoSuchRoot if p != 1 mod d
            xi_table_.resize((size_t)d_);
            xi_table_[0] = F.one();
            for (int i = 1; i < d_; ++i) xi_table_[(size_t)i] = F.mul(xi_table_[(size_t)i - 1], xi);
        }
        return xi_table_[(size_t)m];
    }
    // over Q only the powers landing in {1,-1} exist
    if (d_ % 2 == 0 && m == d_ / 2) return Scalar::rat(Rat(-1));
    throw NoSuchRoot("xi^" + std::to_string(m) + " at level " + std::to_string(d_) +
                     " is irrational");
}

Polynomial HeisenbergAction::act(const GroupElement& g, const Polynomial& f) const {
    if (g.d != d_) throw LevelMismatch();
    if (!same_ring(f.ring(), ring_)) throw RingMismatch();
    // variable permutation from sigma^a and iota^c: x_i -> x_{perm(i)}
    // applied as iota first, then tau^b (scalars), then sigma^a.
    const int n = ring_->nvars();
    std::vector<int> image((size_t)n);
    std::iota(image.begin(), image.end(), 0);
    for (int i = 0; i < d_; ++i) {
        int src = i;
        int after_iota = g.c ? mod(-src, d_) : src;
        int after_sigma = mod(after_iota - g.a, d_);
        image[(size_t)var(src)] = var(after_sigma);
    }
    // tau^b scales x_i by xi^{-i b} BEFORE the sigma permutation; acting on a
    // monomial with block exponents e_i (after iota) gives xi^{-b * sum i e_i}.
    Polynomial permuted = [&] {
        if (g.c) {
            // apply iota as its own renaming first so tau weights use post-iota indices
            std::vector<int> iota_img((size_t)n);
            std::iota(iota_img.begin(), iota_img.end(), 0);
            for (int i = 0; i < d_; ++i) iota_img[(size_t)var(i)] = var(mod(-i, d_));
            Polynomial fi = f.renamed(ring_, iota_img);
            std::vector<int> sig_img((size_t)n);
            std::iota(sig_img.begin(), sig_img.end(), 0);
            for (int i = 0; i < d_; ++i) sig_img[(size_t)var(i)] = var(mod(i - g.a, d_));
            if (g.b == 0) return fi.renamed(ring_, sig_img);
            Polynomial ft = fi.scale_terms([&](const Monomial& m) {
                long long w = 0;
                for (int i = 0; i < d_; ++i) w += (long long)i * m.e[(size_t)var(i)];
                return xi_pow(-(long long)g.b * w);
            });
            return ft.renamed(ring_, sig_img);
        }
        std::vector<int> sig_img((size_t)n);
        std::iota(sig_img.begin(), sig_img.end(), 0);
        for (int i = 0; i < d_; ++i) sig_img[(size_t)var(i)] = var(mod(i - g.a, d_));
        if (g.b == 0) return f.renamed(ring_, sig_img);
        Polynomial ft = f.scale_terms([&](const Monomial& m) {
            long long w = 0;
            for (int i = 0; i < d_; ++i) w += (long long)i * m.e[(size_t)var(i)];
            return xi_pow(-(long long)g.b * w);
        });
        return ft.renamed(ring_, sig_img);
    }();
    if (g.e == 0) return permuted;
    return permuted.scaled(xi_pow(g.e));
}

ProjectivePoint HeisenbergAction::act(const GroupElement& g, const ProjectivePoint& P) const {
    if (g.d != d_) throw LevelMismatch();
    if ((int)P.size() != ring_->nvars()) throw LevelMismatch();
    const Field& F = ring_->field();
    std::vector<Scalar> v(P.coords().begin(), P.coords().end());
    // dual actions: iota: v_i <- v_{-i}; tau^b: v_i <- xi^{ib} v_i; sigma^a: v_i <- v_{i+a}
    if (g.c) {
        std::vector<Scalar> w = v;
        for (int i = 0; i < d_; ++i) w[(size_t)var(i)] = v[(size_t)var(mod(-i, d_))];
        v = std::move(w);
    }
    if (g.b) {
        for (int i = 0; i < d_; ++i)
            v[(size_t)var(i)] = F.mul(v[(size_t)var(i)], xi_pow((long long)i * g.b));
    }
    if (g.a) {
        std::vector<Scalar> w = v;
        for (int i = 0; i < d_; ++i) w[(size_t)var(i)] = v[(size_t)var(mod(i + g.a, d_))];
        v = std::move(w);
    }
    return ProjectivePoint(ring_, std::move(v));
}

std::vector<ProjectivePoint> HeisenbergAction::orbit(const ProjectivePoint& P,
                                                     std::span<const GroupElement> generators,
                                                     size_t max_size) const {
    std::unordered_set<ProjectivePoint, ProjectivePointHash> seen;
    std::deque<ProjectivePoint> queue;
    std::vector<ProjectivePoint> out;
    seen.insert(P);
    queue.push_back(P);
    out.push_back(P);
    while (!queue.empty()) {
        ProjectivePoint cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            ProjectivePoint next = act(g, cur);
            if (seen.insert(next).second) {
                if (out.size() >= max_size) throw BadParameter("orbit exceeds max_size");
                queue.push_back(next);
                out.push_back(next);
            }
        }
    }
    return out;
}

std::vector<Polynomial> HeisenbergAction::fixed_subspace(
    int degree, std::span<const GroupElement> generators) const {
    const Field& F = ring_->field();
    if (F.is_prime_field()) {
        // Maschke guard: p must not divide the subgroup order (bounded by the
        // generated sigma/tau orders times the central mu_d)
        long long bound = 1;
        for (const auto& g : generators) {
            int os = g.a ? d_ / std::gcd(d_, g.a) : 1;
            int ot = g.b ? d_ / std::gcd(d_, g.b) : 1;
            bound *= (long long)os * ot * (g.c ? 2 : 1);
        }
        bound *= d_;
        if (bound % (long long)F.modulus() == 0)
            throw ModularObstruction("p divides the subgroup order");
    }
    auto basis = graded_basis(ring_, degree);
    std::unordered_map<Monomial, size_t, MonomialHash> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    size_t n = basis.size();
    FieldMatrix stacked(F, n * generators.size(), n);
    for (size_t gi = 0; gi < generators.size(); ++gi) {
        for (size_t j = 0; j < n; ++j) {
            Polynomial m = Polynomial::term(ring_, basis[j], F.one());
            Polynomial gm = act(generators[gi], m);
            if (gm.nterms() != 1) throw Error("generator does not map monomials to monomials");
            size_t i = index.at(gm.leading_monomial());
            Scalar c = gm.leading_coeff();
            // row block gi: (M_g - I) column j
            stacked.at(gi * n + i, j) = F.add(stacked.at(gi * n + i, j), c);
            stacked.at(gi * n + j, j) = F.sub(stacked.at(gi * n + j, j), F.one());
        }
    }
    auto ker = stacked.kernel();
    std::vector<Polynomial> out;
    out.reserve(ker.size());
    for (const auto& v : ker) {
        std::vector<std::pair<Monomial, Scalar>> terms;
        for (size_t j = 0; j < n; ++j)
            if (!v[j].is_zero()) terms.emplace_back(basis[j], v[j]);
        out.push_back(Polynomial::from_terms(ring_, std::move(terms)));
    }
    return out;
}

// ------------------------------------------------------------------ matrices

PolyMatrix moore_even(int d, std::span<const Polynomial> xs, std::span<const Polynomial> ys) {
    if ((int)xs.size() != 2 * d || (int)ys.size() != 2 * d) throw LevelMismatch();
    RingPtr R = xs[0].ring();
    PolyMatrix M(R, (size_t)d, (size_t)d);
    auto X = [&](int i) -> const Polynomial& { return xs[(size_t)mod(i, 2 * d)]; };
    auto Y = [&](int i) -> const Polynomial& { return ys[(size_t)mod(i, 2 * d)]; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            M.at((size_t)i, (size_t)j) = X(i + j) * Y(i - j) + X(i + j + d) * Y(i - j + d);
    return M;
}

PolyMatrix moore_odd(int n, std::span<const Polynomial> xs, std::span<const Polynomial> ys) {
    if (n % 2 == 0) throw BadSize("moore_odd needs odd n");
    if ((int)xs.size() != n || (int)ys.size() != n) throw LevelMismatch();
    RingPtr R = xs[0].ring();
    int h = (n + 1) / 2;  // the inverse of 2 mod n
    PolyMatrix M(R, (size_t)n, (size_t)n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M.at((size_t)i, (size_t)j) =
                xs[(size_t)mod(h * (i + j), n)] * ys[(size_t)mod(h * (i - j), n)];
    return M;
}

PolyMatrix l_matrix(std::span<const Polynomial> zs, std::span<const Polynomial> ys) {
    if (zs.size() != 5 || ys.size() != 5) throw LevelMismatch();
    RingPtr R = zs[0].ring();
    PolyMatrix L(R, 5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            L.at((size_t)i, (size_t)j) = zs[(size_t)mod(2 * i - j, 5)] * ys[(size_t)mod(i - j, 5)];
    return L;
}

PolyMatrix blvs_matrix(std::span<const Polynomial> zs) {
    if (zs.size() != 4) throw LevelMismatch();
    RingPtr R = zs[0].ring();
    auto sq = [&](int i, int j) { return zs[(size_t)i] * zs[(size_t)i] * zs[(size_t)j] * zs[(size_t)j]; };
    Polynomial s01 = sq(0, 1), s23 = sq(2, 3), s02 = sq(0, 2), s13 = sq(1, 3), s03 = sq(0, 3),
               s12 = sq(1, 2);
    PolyMatrix N(R, 4, 4);
    N.at(0, 0) = s01 * s23;
    N.at(1, 1) = s01 * s01 + s23 * s23;
    N.at(2, 2) = s02 * s02 + s13 * s13;
    N.at(3, 3) = s03 * s03 + s12 * s12;
    N.at(1, 2) = (s01 + s23) * (s13 - s02);
    N.at(1, 3) = (s01 - s23) * (s03 - s12);
    N.at(2, 3) = (s02 + s13) * (s03 + s12);
    N.at(2, 1) = N.at(1, 2);
    N.at(3, 1) = N.at(1, 3);
    N.at(3, 2) = N.at(2, 3);
    return N;
}

HessianBlocks hessian_blocks(std::span<const Polynomial> zs, std::span<const Polynomial> ws) {
    if (zs.size() != 4 || ws.size() != 4) throw LevelMismatch();
    if (ws[3] != ws[1]) throw BadParameter("w3 must equal w1");
    RingPtr R = zs[0].ring();
    auto Z = [&](int i) -> const Polynomial& { return zs[(size_t)mod(i, 4)]; };
    auto W = [&](int i) -> const Polynomial& { return ws[(size_t)mod(i, 4)]; };
    PolyMatrix A(R, 4, 4), B(R, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            A.at((size_t)i, (size_t)j) = Z(i + j) * W(i - j);
            B.at((size_t)i, (size_t)j) = Z(i + j - 1) * W(i - j);
        }
    HessianBlocks hb{PolyMatrix(R, 8, 8), A, B, PolyMatrix(), PolyMatrix(), PolyMatrix(),
                     PolyMatrix()};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            hb.R.at(i, j) = A.at(i, j);
            hb.R.at(i + 4, j + 4) = B.at(i, j);
        }
    size_t lo[2] = {0, 1}, hi[2] = {2, 3};
    hb.A1 = A.submatrix(lo, lo);
    hb.A2 = A.submatrix(lo, hi);
    hb.B1 = B.submatrix(lo, lo);
    hb.B2 = B.submatrix(lo, hi);
    return hb;
}

std::vector<Polynomial> coordinate_vector(const RingPtr& ring, int offset, int count) {
    if (count < 0) count = ring->nvars() - offset;
    std::vector<Polynomial> xs;
    xs.reserve((size_t)count);
    for (int i = 0; i < count; ++i) xs.push_back(Polynomial::variable(ring, offset + i));
    return xs;
}

namespace {

Polynomial mono3(const RingPtr& R, int i, int j, int k) {
    return Polynomial::variable(R, i) * Polynomial::variable(R, j) * Polynomial::variable(R, k);
}
Polynomial mono2(const RingPtr& R, int i, int j) {
    return Polynomial::variable(R, i) * Polynomial::variable(R, j);
}

}  // namespace

std::vector<std::vector<std::vector<Polynomial>>> quadric_type_blocks_level10(const RingPtr& R) {
    if (R->nvars() != 10) throw LevelMismatch();
    HeisenbergAction H(R, 10);
    auto x = [&](int i) { return Polynomial::variable(R, mod(i, 10)); };
    std::vector<std::vector<Polynomial>> seeds = {
        // V1
        {x(0) * x(0) + x(5) * x(5), x(1) * x(9) + x(6) * x(4), x(2) * x(8) + x(7) * x(3)},
        // V2
        {x(0) * x(5), x(9) * x(6) + x(4) * x(1), x(8) * x(7) + x(3) * x(2)},
        // V3
        {x(0) * x(0) - x(5) * x(5), x(1) * x(9) - x(6) * x(4), x(2) * x(8) - x(7) * x(3)},
        // V4
        {x(9) * x(6) - x(4) * x(1), x(8) * x(7) - x(3) * x(2)}};
    std::vector<std::vector<std::vector<Polynomial>>> out;
    for (const auto& type_seeds : seeds) {
        std::vector<std::vector<Polynomial>> blocks;
        for (const auto& f : type_seeds) {
            std::vector<Polynomial> orbit;
            for (int i = 0; i < 5; ++i) orbit.push_back(H.sigma(f, i));
            blocks.push_back(std::move(orbit));
        }
        out.push_back(std::move(blocks));
    }
    return out;
}

NamedBasis invariant_basis(const std::string& case_tag, const RingPtr& R) {
    NamedBasis nb;
    if (case_tag == "1_6") {
        if (R->nvars() != 6) throw LevelMismatch();
        HeisenbergAction H(R, 6);
        std::vector<Polynomial> f = {
            // f0 = x0^3+x2^3+x4^3
            mono3(R, 0, 0, 0) + mono3(R, 2, 2, 2) + mono3(R, 4, 4, 4),
            // f1 = x1^2 x4 + x3^2 x0 + x5^2 x2
            mono3(R, 1, 1, 4) + mono3(R, 3, 3, 0) + mono3(R, 5, 5, 2),
            // f2 = x1x2x3 + x3x4x5 + x5x0x1
            mono3(R, 1, 2, 3) + mono3(R, 3, 4, 5) + mono3(R, 5, 0, 1),
            // f3 = x0x2x4
            mono3(R, 0, 2, 4)};
        for (int j = 0; j < 4; ++j) {
            nb.names.push_back("f" + std::to_string(j));
            nb.polys.push_back(f[(size_t)j]);
        }
        for (int j = 0; j < 4; ++j) {
            nb.names.push_back("sf" + std::to_string(j));
            nb.polys.push_back(H.sigma(f[(size_t)j]));
        }
        return nb;
    }
    if (case_tag == "1_8") {
        if (R->nvars() != 8) throw LevelMismatch();
        HeisenbergAction H(R, 8);
        std::vector<Polynomial> f = {mono2(R, 0, 0) + mono2(R, 4, 4),
                                     mono2(R, 1, 7) + mono2(R, 3, 5), mono2(R, 2, 6)};
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 4; ++i) {
                nb.names.push_back("s" + std::to_string(i) + "f" + std::to_string(j));
                nb.polys.push_back(H.sigma(f[(size_t)j], i));
            }
        return nb;
    }
    if (case_tag == "1_10") {
        auto blocks = quadric_type_blocks_level10(R);
        for (size_t t = 0; t < blocks.size(); ++t)
            for (size_t b = 0; b < blocks[t].size(); ++b)
                for (size_t i = 0; i < blocks[t][b].size(); ++i) {
                    nb.names.push_back("V" + std::to_string(t + 1) + "." + std::to_string(b) +
                                       ".s" + std::to_string(i));
                    nb.polys.push_back(blocks[t][b][i]);
                }
        return nb;
    }
    if (case_tag == "klein") {
        if (R->nvars() != 3) throw LevelMismatch();
        // f4 = x1^3 x2 - x2^3 x3 - x3^3 x1 in coordinates (x1,x2,x3) = vars 0,1,2
        Polynomial x1 = Polynomial::variable(R, 0), x2 = Polynomial::variable(R, 1),
                   x3 = Polynomial::variable(R, 2);
        Polynomial f4 = x1.pow(3) * x2 - x2.pow(3) * x3 - x3.pow(3) * x1;
        PolyMatrix H(R, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) H.at((size_t)i, (size_t)j) = f4.partial(i).partial(j);
        nb.names = {"f4", "f6"};
        nb.polys = {f4, H.det()};
        return nb;
    }
    throw UnknownCase("unknown invariant basis case '" + case_tag + "'");
}

namespace {
int minus_count(int d) { return d % 2 == 0 ? d / 2 - 1 : (d - 1) / 2; }
}

int EigenspaceEmbedding::dim() const {
    // x_{-i} = sign * x_i: the minus space kills x_0 (and x_{d/2} for even d)
    return sign < 0 ? minus_count(d) - 1 : d / 2;
}

std::vector<Polynomial> EigenspaceEmbedding::embed_polys(const RingPtr& target,
                                                         std::span<const Polynomial> coords) const {
    std::vector<Polynomial> v((size_t)d, Polynomial(target));
    if (sign < 0) {
        int k = minus_count(d);
        if ((int)coords.size() != k) throw LevelMismatch();
        for (int i = 1; i <= k; ++i) {
            v[(size_t)i] = coords[(size_t)(i - 1)];
            v[(size_t)(d - i)] = -coords[(size_t)(i - 1)];
        }
    } else {
        int k = d / 2 + 1;
        if ((int)coords.size() != k) throw LevelMismatch();
        for (int i = 0; i < k; ++i) {
            v[(size_t)i] = coords[(size_t)i];
            if (i > 0 && i < d - i) v[(size_t)(d - i)] = coords[(size_t)i];
        }
    }
    return v;
}

std::vector<Scalar> EigenspaceEmbedding::embed(const Field& F,
                                               std::span<const Scalar> coords) const {
    std::vector<Scalar> v((size_t)d, F.zero());
    if (sign < 0) {
        int k = minus_count(d);
        if ((int)coords.size() != k) throw LevelMismatch();
        for (int i = 1; i <= k; ++i) {
            v[(size_t)i] = coords[(size_t)(i - 1)];
            v[(size_t)(d - i)] = F.neg(coords[(size_t)(i - 1)]);
        }
    } else {
        int k = d / 2 + 1;
        if ((int)coords.size() != k) throw LevelMismatch();
        for (int i = 0; i < k; ++i) {
            v[(size_t)i] = coords[(size_t)i];
            if (i > 0 && i < d - i) v[(size_t)(d - i)] = coords[(size_t)i];
        }
    }
    return v;
}

ProjectivePoint EigenspaceEmbedding::embed_point(const RingPtr& target,
                                                 std::span<const Scalar> coords) const {
    if (target->nvars() != d) throw LevelMismatch();
    return ProjectivePoint(target, embed(target->field(), coords));
}

}  // namespace abelcy
