#include "abelcy/singular.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace abelcy {

SingularSchemeReport singular_scheme(const Ideal& I, size_t codim, const SingularOptions& opt) {
    PolyMatrix J = jacobian(I.gens());
    size_t rows = J.rows(), cols = J.cols();
    if (codim == 0 || codim > std::min(rows, cols)) throw BadSize("bad codimension");
    auto row_sets = subsets_lex(rows, codim);
    auto col_sets = subsets_lex(cols, codim);
    size_t total = row_sets.size() * col_sets.size();

    SingularSchemeReport rep;
    rep.minor_count_total = total;
    rep.augmented = I.gens();

    auto minor_at = [&](size_t flat) {
        const auto& rs = row_sets[flat / col_sets.size()];
        const auto& cs = col_sets[flat % col_sets.size()];
        return J.minor(rs, cs);
    };

    if (total <= opt.max_minors) {
        for (size_t k = 0; k < total; ++k) {
            Polynomial m = minor_at(k);
            if (!m.is_zero()) rep.augmented.push_back(std::move(m));
        }
        rep.minors_used = total;
        Ideal A(I.ring(), rep.augmented);
        rep.gb = buchberger_cached(A, opt.gb_budget, opt.cache);
        rep.hilbert = hilbert(rep.gb);
        return rep;
    }

    if (!opt.allow_sampling)
        throw ResourceBudgetExceeded("singular scheme needs " + std::to_string(total) +
                                     " minors, budget is " + std::to_string(opt.max_minors));

    // Seeded deterministic order over all minors; batches are added until the
    // measured (dimension, degree) stabilizes.  The subset cuts out a scheme
    // containing the true singular scheme, so dimension and degree only drop
    // as minors accumulate; the caller corroborates the final degree with
    // per-point certificates.
    std::vector<size_t> order(total);
    std::iota(order.begin(), order.end(), (size_t)0);
    std::mt19937_64 rng(opt.seed);
    for (size_t k = 0; k + 1 < order.size(); ++k)
        std::swap(order[k], order[k + rng() % (order.size() - k)]);
    rep.sampled = true;

    GroebnerBasis base = buchberger_cached(Ideal(I.ring(), I.gens()), opt.gb_budget, opt.cache);
    std::vector<Polynomial> gens = base.basis();
    size_t used = 0;
    int last_dim = I.ring()->nvars();
    BigInt last_deg = -1;
    while (used < opt.max_minors && used < total) {
        size_t take = std::min(opt.batch, std::min(opt.max_minors, total) - used);
        for (size_t k = 0; k < take; ++k) {
            Polynomial m = normal_form(minor_at(order[used + k]), base);
            if (!m.is_zero()) gens.push_back(std::move(m));
        }
        used += take;
        Ideal A(I.ring(), gens);
        rep.gb = buchberger_cached(A, opt.gb_budget, opt.cache);
        rep.hilbert = hilbert(rep.gb);
        gens = rep.gb.basis();
        bool stable = rep.hilbert.dimension == last_dim && rep.hilbert.degree == last_deg;
        if (rep.hilbert.dimension <= 0 && stable) break;
        last_dim = rep.hilbert.dimension;
        last_deg = rep.hilbert.degree;
    }
    rep.minors_used = used;
    rep.augmented = gens;
    return rep;
}

RankCertificate singular_at(const Ideal& I, const ProjectivePoint& P, size_t codim) {
    RankCertificate cert;
    std::span<const Scalar> coords(P.coords());
    for (const auto& g : I.gens())
        if (!g.evaluate(coords).is_zero()) {
            throw PointNotOnVariety();
        }
    cert.on_variety = true;
    PolyMatrix J = jacobian(I.gens());
    FieldMatrix Jp = J.evaluate(coords);
    cert.jacobian_rank = Jp.rank();
    cert.singular = cert.jacobian_rank < codim;
    return cert;
}

long long t1_defect(const Ideal& I, const SingularSchemeReport& S, const Budget& budget,
                    uint64_t seed) {
    const RingPtr& R = I.ring();
    const Field& F = R->field();
    const auto& gens = I.gens();
    if (gens.empty()) throw BadParameter("empty ideal");
    int d = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != d) throw MixedDegrees();
    bool empty_sing = S.hilbert.dimension < 0;
    if (!empty_sing && S.hilbert.dimension != 0) throw NotNodal("singular scheme has dimension > 0");

    size_t n = gens.size();
    int nv = R->nvars();

    // degree-d monomial basis of S = R/I : standard monomials mod GB(I)
    GroebnerBasis GI = buchberger(I, budget);
    auto all_d = graded_basis(R, d);
    std::vector<Monomial> std_mono;
    for (const auto& m : all_d) {
        bool reducible = false;
        for (const auto& b : GI.basis())
            if (b.leading_monomial().divides(m)) {
                reducible = true;
                break;
            }
        if (!reducible) std_mono.push_back(m);
    }
    std::unordered_map<Monomial, size_t, MonomialHash> mono_index;
    for (size_t i = 0; i < std_mono.size(); ++i) mono_index.emplace(std_mono[i], i);
    size_t dimS = std_mono.size();
    size_t dimV = n * dimS;  // ambient (S_d)^n

    auto tuple_to_row = [&](const std::vector<Polynomial>& tuple) {
        std::vector<Scalar> row(dimV, F.zero());
        for (size_t j = 0; j < n; ++j) {
            Polynomial nf = normal_form(tuple[j], GI);
            for (size_t t = 0; t < nf.nterms(); ++t) {
                auto it = mono_index.find(nf.monomial(t));
                if (it == mono_index.end()) throw Error("normal form outside standard monomials");
                row[j * dimS + it->second] = nf.coeff(t);
            }
        }
        return row;
    };

    // submodule D = span{ x_k * J_i } with J_i = (df_1/dx_i, ..., df_n/dx_i)
    std::vector<std::vector<Scalar>> d_rows;
    for (int i = 0; i < nv; ++i) {
        std::vector<Polynomial> Ji;
        Ji.reserve(n);
        for (size_t j = 0; j < n; ++j) Ji.push_back(gens[j].partial(i));
        for (int k = 0; k < nv; ++k) {
            std::vector<Polynomial> tuple;
            tuple.reserve(n);
            for (size_t j = 0; j < n; ++j) tuple.push_back(Ji[j].mul_monomial(Monomial::var(k), F.one()));
            d_rows.push_back(tuple_to_row(tuple));
        }
    }
    size_t rankD = span_rank(F, d_rows);

    if (empty_sing) {
        // no local conditions: T^1 itself
        return (long long)(dimV - rankD);
    }

    // local-triviality conditions: for each (n-1)-subset C of the variables,
    // the minor of [g | Jac] on columns {g} u C expands as
    // sum_j (-1)^j g_j det(Jac rows != j, cols C); require membership in the
    // saturated singular-scheme ideal.  The augmented ideal agrees with the
    // saturation in degrees past both its own Hilbert stabilization and the
    // length bound of the scheme, so each condition is pushed up to that
    // degree by repeated multiplication with a generic linear form.
    PolyMatrix J = jacobian(gens);
    auto col_sets = subsets_lex((size_t)nv, n - 1);
    std::vector<std::vector<Polynomial>> cof(col_sets.size());
    for (size_t c = 0; c < col_sets.size(); ++c) {
        cof[c].reserve(n);
        for (size_t j = 0; j < n; ++j) {
            std::vector<size_t> rows;
            for (size_t r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            cof[c].push_back(J.submatrix(rows, col_sets[c]).det());
        }
    }

    if (!F.is_prime_field())
        throw BadParameter("the nodal T^1 computation runs over a prime field");
    uint64_t p = F.modulus();

    int cond_deg = d + (n - 1) * (d - 1);
    // stabilization degree of the augmented ideal's Hilbert function
    int t_stab = 0;
    {
        std::vector<BigInt> P = S.hilbert.numerator;
        auto at_one = [](const std::vector<BigInt>& f) {
            BigInt s = 0;
            for (const auto& c : f) s += c;
            return s;
        };
        int cancelled = 0;
        while (!P.empty() && at_one(P) == 0 && P.size() > 1) {
            std::vector<BigInt> q(P.size() - 1);
            BigInt carry = 0;
            for (size_t k = 0; k + 1 < P.size(); ++k) {
                carry = k == 0 ? P[k] : P[k] + carry;
                q[k] = carry;
            }
            P = std::move(q);
            ++cancelled;
        }
        if (cancelled != nv - 1)
            throw NotNodal("singular scheme Hilbert series is not zero-dimensional");
        while (!P.empty() && P.back() == 0) P.pop_back();
        t_stab = (int)P.size() - 1;
    }
    long long length = S.hilbert.degree.convert_to<long long>();
    int target = std::max({cond_deg, t_stab, (int)length - 1});

    // generic linear form and the per-degree shift maps NF(ell * std_mono)
    std::mt19937_64 rng(seed);
    Polynomial ell(R);
    for (int i = 0; i < nv; ++i)
        ell = ell + Polynomial::term(R, Monomial::var(i), Scalar::fp(1 + rng() % (p - 1)));
    auto is_standard = [&](const Monomial& m) {
        for (const auto& b : S.gb.basis())
            if (b.leading_monomial().divides(m)) return false;
        return true;
    };
    // standard monomials of the next degree: variables times current ones
    auto bump_degree = [&](const std::vector<Monomial>& cur) {
        std::unordered_set<Monomial, MonomialHash> seen;
        std::vector<Monomial> out;
        for (const auto& m : cur) {
            for (int i = 0; i < nv; ++i) {
                Monomial m2 = m * Monomial::var(i);
                if (seen.insert(m2).second && is_standard(m2)) out.push_back(m2);
            }
        }
        std::sort(out.begin(), out.end(),
                  [&](const Monomial& a, const Monomial& b) { return R->cmp(a, b) > 0; });
        return out;
    };

    // condition-start vectors in the degree-cond_deg residue space,
    // row-major over the residue monomials, F_p entries
    std::vector<Monomial> res;
    for (const auto& m : graded_basis(R, cond_deg))
        if (is_standard(m)) res.push_back(m);
    std::unordered_map<Monomial, size_t, MonomialHash> res_index;
    for (size_t i = 0; i < res.size(); ++i) res_index.emplace(res[i], i);
    size_t ncols = dimV * col_sets.size();
    std::vector<std::vector<uint64_t>> mat(res.size(), std::vector<uint64_t>(ncols, 0));
    for (size_t j = 0; j < n; ++j) {
        for (size_t mi = 0; mi < dimS; ++mi) {
            for (size_t c = 0; c < col_sets.size(); ++c) {
                if (cof[c][j].is_zero()) continue;
                Scalar sign = (j % 2 == 0) ? F.one() : F.neg(F.one());
                Polynomial nf = normal_form(cof[c][j].mul_monomial(std_mono[mi], sign), S.gb);
                size_t col = (j * dimS + mi) * col_sets.size() + c;
                for (size_t t = 0; t < nf.nterms(); ++t)
                    mat[res_index.at(nf.monomial(t))][col] = nf.coeff(t).u;
            }
        }
    }
    // push all condition columns up to the target degree via ell
    for (int t = cond_deg; t < target; ++t) {
        std::vector<Monomial> next = bump_degree(res);
        std::unordered_map<Monomial, size_t, MonomialHash> next_index;
        for (size_t i = 0; i < next.size(); ++i) next_index.emplace(next[i], i);
        std::vector<std::vector<std::pair<size_t, uint64_t>>> shift(res.size());
        for (size_t i = 0; i < res.size(); ++i) {
            Polynomial nf = normal_form(ell.mul_monomial(res[i], F.one()), S.gb);
            for (size_t k = 0; k < nf.nterms(); ++k)
                shift[i].emplace_back(next_index.at(nf.monomial(k)), nf.coeff(k).u);
        }
        std::vector<std::vector<uint64_t>> nmat(next.size(), std::vector<uint64_t>(ncols, 0));
        for (size_t i = 0; i < res.size(); ++i) {
            const auto& src = mat[i];
            for (const auto& [ni, s] : shift[i]) {
                auto& dst = nmat[ni];
                for (size_t col = 0; col < ncols; ++col) {
                    if (!src[col]) continue;
                    dst[col] = (dst[col] + mulmod_u64(s, src[col], p)) % p;
                }
            }
        }
        mat = std::move(nmat);
        res = std::move(next);
        res_index = std::move(next_index);
    }
    // final conditions: one row per (residue monomial, column set); g is
    // admissible iff all rows pair to zero
    std::vector<std::vector<uint64_t>> l_rows;
    for (size_t ri = 0; ri < mat.size(); ++ri) {
        for (size_t c = 0; c < col_sets.size(); ++c) {
            std::vector<uint64_t> row(dimV, 0);
            bool nonzero = false;
            for (size_t v = 0; v < dimV; ++v) {
                row[v] = mat[ri][v * col_sets.size() + c];
                nonzero |= row[v] != 0;
            }
            if (nonzero) l_rows.push_back(std::move(row));
        }
    }
    // F_p row reduction
    auto fp_rank = [&](std::vector<std::vector<uint64_t>>& rows, size_t width) {
        size_t rank = 0;
        for (size_t col = 0; col < width && rank < rows.size(); ++col) {
            size_t piv = rows.size();
            for (size_t r = rank; r < rows.size(); ++r)
                if (rows[r][col]) {
                    piv = r;
                    break;
                }
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rank]);
            uint64_t inv = invmod_u64(rows[rank][col], p);
            for (size_t cz = col; cz < width; ++cz)
                rows[rank][cz] = mulmod_u64(rows[rank][cz], inv, p);
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || !rows[r][col]) continue;
                uint64_t f = rows[r][col];
                for (size_t cz = col; cz < width; ++cz)
                    rows[r][cz] =
                        (rows[r][cz] + mulmod_u64(f, p - rows[rank][cz], p)) % p;
            }
            ++rank;
        }
        return rank;
    };
    size_t rankL = fp_rank(l_rows, dimV);
    size_t kerL = dimV - rankL;
    // D lies inside ker L (Jacobian-column substitutions give minors of the
    // augmented ideal); the defect is dim(ker L / D)
    return (long long)(kerL - rankD);
}

}  // namespace abelcy
