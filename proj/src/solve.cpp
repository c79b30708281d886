#include "abelcy/solve.hpp"

#include <algorithm>
#include <random>

#include "abelcy/hilbert.hpp"

namespace abelcy {

namespace {

using UPoly = std::vector<uint64_t>;  // dense, low-to-high, over F_p

void trim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& mod, uint64_t p) {
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    // reduce mod the monic polynomial `mod`
    size_t dm = mod.size() - 1;
    for (size_t k = r.size(); k-- > dm;) {
        uint64_t c = r[k];
        if (!c) continue;
        r[k] = 0;
        for (size_t j = 0; j < dm; ++j)
            r[k - dm + j] = (r[k - dm + j] + mulmod_u64(c, p - mod[j] % p, p)) % p;
    }
    r.resize(dm);
    return r;
}

UPoly powmod_poly(UPoly base, uint64_t e, const UPoly& mod, uint64_t p) {
    UPoly r{1};
    r.resize(mod.size() - 1, 0);
    while (e) {
        if (e & 1) r = mulmod(r, base, mod, p);
        base = mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

void make_monic(UPoly& f, uint64_t p) {
    trim(f);
    if (f.empty()) return;
    uint64_t inv = invmod_u64(f.back(), p);
    for (auto& c : f) c = mulmod_u64(c, inv, p);
}

UPoly gcd(UPoly a, UPoly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        make_monic(b, p);
        // a mod b
        while (a.size() >= b.size()) {
            trim(a);
            if (a.size() < b.size()) break;
            uint64_t c = a.back();
            if (c) {
                size_t shift = a.size() - b.size();
                for (size_t j = 0; j < b.size(); ++j)
                    a[shift + j] = (a[shift + j] + mulmod_u64(c, p - b[j] % p, p)) % p;
            }
            a.pop_back();
        }
        trim(a);
        std::swap(a, b);
    }
    make_monic(a, p);
    return a;
}

// collect roots of a product of distinct linear factors
void split_roots(const UPoly& f, uint64_t p, std::mt19937_64& rng, std::vector<uint64_t>& out) {
    if (f.size() <= 1) return;
    if (f.size() == 2) {
        // x + c = 0 -> root p - c
        out.push_back(f[1] == 1 ? (p - f[0] % p) % p : mulmod_u64(p - f[0] % p, invmod_u64(f[1], p), p));
        return;
    }
    // Cantor-Zassenhaus equal-degree splitting for degree-1 factors
    while (true) {
        uint64_t a = rng() % p;
        // h = (x + a)^((p-1)/2) - 1 mod f
        UPoly xa{a, 1};
        UPoly h = powmod_poly(xa, (p - 1) / 2, f, p);
        if (h.empty()) continue;
        h[0] = (h[0] + p - 1) % p;
        UPoly g = gcd(h, f, p);
        trim(g);
        if (g.size() <= 1 || g.size() == f.size()) continue;
        // f = g * (f/g)
        UPoly q = f;
        // divide q by g (monic)
        UPoly quotient(q.size() - g.size() + 1, 0);
        for (size_t k = q.size(); k-- > g.size() - 1;) {
            trim(q);
            if (q.size() < g.size()) break;
            uint64_t c = q.back();
            size_t shift = q.size() - g.size();
            quotient[shift] = c;
            for (size_t j = 0; j < g.size(); ++j)
                q[shift + j] = (q[shift + j] + mulmod_u64(c, p - g[j] % p, p)) % p;
            q.pop_back();
        }
        trim(quotient);
        split_roots(g, p, rng, out);
        split_roots(quotient, p, rng, out);
        return;
    }
}

}  // namespace

std::vector<uint64_t> univariate_roots(std::vector<uint64_t> coeffs, uint64_t p, uint64_t seed) {
    for (auto& c : coeffs) c %= p;
    trim(coeffs);
    std::vector<uint64_t> out;
    if (coeffs.empty()) throw BadParameter("zero polynomial has every root");
    if (coeffs.size() == 1) return out;
    make_monic(coeffs, p);
    // roots in F_p: gcd(f, x^p - x)
    UPoly xp = powmod_poly(UPoly{0, 1}, p, coeffs, p);  // x^p mod f
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = (xp[1] + p - 1) % p;  // x^p - x
    UPoly lin = gcd(xp, coeffs, p);
    if (lin.size() <= 1) return out;
    std::mt19937_64 rng(seed);
    split_roots(lin, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// extract the coefficients of a univariate polynomial in variable `var`
bool as_univariate(const Polynomial& f, int var, std::vector<uint64_t>& coeffs) {
    coeffs.clear();
    for (size_t t = 0; t < f.nterms(); ++t) {
        const Monomial& m = f.monomial(t);
        for (int v = 0; v < f.ring()->nvars(); ++v)
            if (v != var && m.e[(size_t)v]) return false;
        size_t e = m.e[(size_t)var];
        if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
        coeffs[e] = f.coeff(t).u;
    }
    return true;
}

void solve_affine(const RingPtr& ring, std::vector<Polynomial> gens, uint64_t seed,
                  const Budget& budget, std::vector<std::vector<Scalar>>& solutions,
                  std::vector<Scalar>& partial, size_t max_points) {
    const Field& F = ring->field();
    int n = ring->nvars();
    // drop zeros; a nonzero constant kills the branch
    std::vector<Polynomial> live;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.degree() == 0) return;
        live.push_back(std::move(g));
    }
    if (live.empty()) {
        if (n == 0) return;  // underdetermined; not zero-dimensional
        throw NotZeroDimensional("free variables remain");
    }
    GroebnerBasis G = buchberger_raw(ring, live, budget);
    if (G.is_unit_ideal()) return;
    // find a univariate polynomial in the last variable
    std::vector<uint64_t> uni;
    bool found = false;
    for (const auto& b : G.basis()) {
        if (as_univariate(b, n - 1, uni)) {
            found = true;
            break;
        }
    }
    if (!found) throw NotZeroDimensional("no univariate eliminant in lex basis");
    auto roots = univariate_roots(uni, F.modulus(), seed);
    for (uint64_t r : roots) {
        if (solutions.size() >= max_points) return;
        Scalar root = Scalar::fp(r);
        if (n == 1) {
            // partial holds later variables first; appending the root keeps
            // the reversed-coordinate convention used by the caller
            std::vector<Scalar> sol = partial;
            sol.push_back(root);
            solutions.push_back(std::move(sol));
            continue;
        }
        // substitute x_{n-1} = r and recurse on the first n-1 variables
        RingPtr sub = Ring::make(F, n - 1, Order{OrderKind::lex},
                                 std::vector<std::string>(ring->names().begin(),
                                                          ring->names().end() - 1));
        std::vector<Polynomial> images;
        images.reserve((size_t)n);
        for (int i = 0; i < n - 1; ++i) images.push_back(Polynomial::variable(sub, i));
        images.push_back(Polynomial::constant(sub, root));
        std::vector<Polynomial> next;
        next.reserve(G.basis().size());
        for (const auto& b : G.basis()) next.push_back(b.compose(sub, images));
        partial.push_back(root);
        solve_affine(sub, std::move(next), seed, budget, solutions, partial, max_points);
        partial.pop_back();
    }
}

}  // namespace

std::vector<ProjectivePoint> zero_dim_solve(const Ideal& I, size_t max_points, uint64_t seed,
                                            const Budget& budget) {
    const RingPtr& R = I.ring();
    const Field& F = R->field();
    if (!F.is_prime_field()) throw BadParameter("zero_dim_solve needs a prime field");
    {
        GroebnerBasis G = buchberger(I, budget);
        HilbertData H = hilbert(G);
        if (H.dimension > 0) throw NotZeroDimensional();
        if (H.dimension < 0) return {};
    }
    int n = R->nvars();
    std::vector<ProjectivePoint> points;
    for (int chart = 0; chart < n && points.size() < max_points; ++chart) {
        // chart: x_j = 0 for j < chart, x_chart = 1
        int rem = n - chart - 1;
        std::vector<Polynomial> gens;
        if (rem == 0) {
            // single candidate point (0:...:0:1)
            std::vector<Scalar> coords((size_t)n, F.zero());
            coords[(size_t)chart] = F.one();
            bool on = true;
            for (const auto& g : I.gens())
                if (!g.evaluate(coords).is_zero()) {
                    on = false;
                    break;
                }
            if (on) points.emplace_back(R, coords);
            continue;
        }
        RingPtr affine = Ring::make(F, rem, Order{OrderKind::lex},
                                    std::vector<std::string>(R->names().begin() + chart + 1,
                                                             R->names().end()));
        std::vector<Polynomial> images;
        for (int j = 0; j < chart; ++j) images.push_back(Polynomial::zero(affine));
        images.push_back(Polynomial::from_int(affine, 1));
        for (int j = 0; j < rem; ++j) images.push_back(Polynomial::variable(affine, j));
        for (const auto& g : I.gens()) gens.push_back(g.compose(affine, images));
        std::vector<std::vector<Scalar>> sols;
        std::vector<Scalar> partial;
        solve_affine(affine, std::move(gens), seed, budget, sols, partial, max_points - points.size());
        for (auto& s : sols) {
            // s holds values for (x_{chart+1}, ..., x_{n-1}) assembled back-to-front
            std::vector<Scalar> coords((size_t)n, F.zero());
            coords[(size_t)chart] = F.one();
            // s holds values for (x_{n-1}, x_{n-2}, ..., x_{chart+1})
            for (size_t k = 0; k < s.size(); ++k) coords[(size_t)(n - 1 - (int)k)] = s[k];
            points.emplace_back(R, std::move(coords));
        }
    }
    return points;
}

}  // namespace abelcy
