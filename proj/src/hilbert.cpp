#include "abelcy/hilbert.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "abelcy/fmatrix.hpp"

namespace abelcy {

namespace {

using Num = std::vector<BigInt>;  // dense polynomial in t

void add_into(Num& a, const Num& b, int shift, int sign) {
    if (a.size() < b.size() + (size_t)shift) a.resize(b.size() + (size_t)shift);
    for (size_t i = 0; i < b.size(); ++i) {
        if (sign > 0)
            a[i + (size_t)shift] += b[i];
        else
            a[i + (size_t)shift] -= b[i];
    }
}

Num mul(const Num& a, const Num& b) {
    Num r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) {
        return x.deg < y.deg;
    });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool divisible = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(g);
    }
    gens = std::move(out);
}

struct NumCache {
    std::unordered_map<uint64_t, Num> memo;

    static uint64_t key(const std::vector<Monomial>& gens) {
        uint64_t h = 14695981039346656037ull;
        for (const auto& g : gens) {
            h ^= g.hash();
            h *= 1099511628211ull;
        }
        return h ^ (uint64_t)gens.size();
    }

    // numerator of the monomial ideal's Hilbert series (gens minimal)
    Num numerator(std::vector<Monomial> gens) {
        if (gens.empty()) return Num{BigInt(1)};
        if (gens.size() == 1 && gens[0].is_one()) return Num{BigInt(0)};
        // pairwise coprime: product formula
        {
            bool coprime = true;
            for (size_t i = 0; i < gens.size() && coprime; ++i)
                for (size_t j = i + 1; j < gens.size() && coprime; ++j)
                    if (!gens[i].coprime(gens[j])) coprime = false;
            if (coprime) {
                Num r{BigInt(1)};
                for (const auto& g : gens) {
                    Num f((size_t)g.deg + 1);
                    f[0] = 1;
                    f[(size_t)g.deg] -= 1;
                    r = mul(r, f);
                }
                return r;
            }
        }
        uint64_t k = key(gens);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        // pivot: most frequent variable among non-pure-power generators
        int counts[kMaxVars] = {0};
        for (const auto& g : gens) {
            int support = 0;
            for (int v = 0; v < kMaxVars; ++v)
                if (g.e[(size_t)v]) ++support;
            if (support <= 1) continue;
            for (int v = 0; v < kMaxVars; ++v)
                if (g.e[(size_t)v]) ++counts[v];
        }
        int pivot = 0;
        for (int v = 1; v < kMaxVars; ++v)
            if (counts[v] > counts[pivot]) pivot = v;
        // N(I) = N(I + (x)) + t * N(I : x)
        std::vector<Monomial> plus, colon;
        for (const auto& g : gens) {
            if (g.e[(size_t)pivot] == 0) plus.push_back(g);
            Monomial q = g;
            if (q.e[(size_t)pivot]) {
                q.e[(size_t)pivot] -= 1;
                q.deg -= 1;
            }
            colon.push_back(q);
        }
        plus.push_back(Monomial::var(pivot));
        minimalize(plus);
        minimalize(colon);
        Num result = numerator(std::move(plus));
        Num right = numerator(std::move(colon));
        add_into(result, right, 1, +1);
        memo.emplace(k, result);
        return result;
    }
};

// binomial C(n, k) for k >= 0
BigInt binom(const BigInt& n, int k) {
    if (k < 0) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

}  // namespace

std::vector<BigInt> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
    (void)nvars;
    minimalize(gens);
    NumCache cache;
    return cache.numerator(std::move(gens));
}

Rat HilbertData::hp_eval(long long t) const {
    Rat acc(0), p(1);
    for (size_t k = 0; k < hp.size(); ++k) {
        acc += hp[k] * p;
        p *= t;
    }
    return acc;
}

HilbertData hilbert(const GroebnerBasis& G) {
    for (const auto& g : G.basis())
        if (!g.is_homogeneous()) throw NotHomogeneous("hilbert needs a homogeneous basis");
    int n = G.ring()->nvars();
    std::vector<Monomial> lts;
    lts.reserve(G.basis().size());
    for (const auto& g : G.basis()) lts.push_back(g.leading_monomial());
    HilbertData H;
    H.numerator = hilbert_numerator(lts, n);
    // cancel (1-t) factors: divide numerator by (1-t)^c until N(1) != 0
    Num P = H.numerator;
    int cancelled = 0;
    auto value_at_one = [](const Num& f) {
        BigInt s = 0;
        for (const auto& c : f) s += c;
        return s;
    };
    auto shrink = [](const Num& f) {
        // f / (1-t): synthetic division; remainder must be zero
        Num q(f.size() - 1);
        BigInt carry = 0;
        // f(t) = (1-t) q(t) -> q_k = f_k + q_{k-1}
        for (size_t k = 0; k + 1 < f.size(); ++k) {
            carry = k == 0 ? f[k] : f[k] + carry;
            q[k] = carry;
        }
        return q;
    };
    while (!P.empty() && value_at_one(P) == 0) {
        if (P.size() == 1) {
            P.clear();
            break;
        }
        P = shrink(P);
        ++cancelled;
    }
    bool zero_quotient = P.empty() || std::all_of(P.begin(), P.end(), [](const BigInt& c) {
        return c == 0;
    });
    if (zero_quotient) {
        // unit ideal: empty projective scheme
        H.dimension = -1;
        H.degree = 0;
        return H;
    }
    int D = n - cancelled;  // affine Krull dimension of R/I
    H.dimension = D - 1;
    H.degree = value_at_one(P);
    if (D <= 0) {
        // finite-length quotient: empty projective scheme
        H.dimension = -1;
        H.degree = 0;
        return H;
    }
    // Hilbert polynomial: HP(t) = sum_k P_k C(t - k + D - 1, D - 1)
    // expand in powers of t with rational coefficients
    std::vector<Rat> hp((size_t)D, Rat(0));
    for (size_t k = 0; k < P.size(); ++k) {
        if (P[k] == 0) continue;
        // C(t - k + D - 1, D - 1) = prod_{i=1}^{D-1} (t - k + i) / (D-1)!
        std::vector<Rat> poly{Rat(1)};
        for (int i = 1; i <= D - 1; ++i) {
            std::vector<Rat> next(poly.size() + 1, Rat(0));
            Rat c = Rat((long long)i - (long long)k);
            for (size_t a = 0; a < poly.size(); ++a) {
                next[a] += poly[a] * c;
                next[a + 1] += poly[a];
            }
            poly = std::move(next);
        }
        Rat fact(1);
        for (int i = 2; i <= D - 1; ++i) fact *= i;
        Rat scale = Rat(BigInt(P[k])) / fact;
        for (size_t a = 0; a < poly.size(); ++a) hp[a] += poly[a] * scale;
    }
    H.hp = hp;
    if (H.dimension == 3) {
        // double difference: HP(t) - 2 HP(t-1) + HP(t-2) = deg * t + (1 - g)
        Rat c0 = H.hp_eval(0) - 2 * H.hp_eval(-1) + H.hp_eval(-2);
        Rat g = Rat(1) - c0;
        if (denominator(g) != 1) throw Error("sectional genus not integral");
        H.sectional_genus = numerator(g);
    }
    return H;
}

BigInt hilbert_series_coefficient(const HilbertData& h, int nvars, int d) {
    // coefficient of t^d in N(t) * sum_m C(m+nvars-1, nvars-1) t^m
    BigInt acc = 0;
    for (size_t k = 0; k < h.numerator.size() && (int)k <= d; ++k) {
        if (h.numerator[k] == 0) continue;
        acc += h.numerator[k] * binom(BigInt(d - (int)k + nvars - 1), nvars - 1);
    }
    return acc;
}

BigInt hilbert_function_direct(const Ideal& I, int d) {
    const RingPtr& R = I.ring();
    auto basis = graded_basis(R, d);
    std::unordered_map<Monomial, size_t, MonomialHash> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    // rows: monomial multiples m * g with deg(m) = d - deg(g)
    std::vector<std::vector<Scalar>> rows;
    const Field& F = R->field();
    for (const auto& g : I.gens()) {
        int dg = g.degree();
        if (dg > d) continue;
        auto mult = graded_basis(R, d - dg);
        for (const auto& m : mult) {
            Polynomial mg = g.mul_monomial(m, F.one());
            std::vector<Scalar> row(basis.size(), F.zero());
            for (size_t t = 0; t < mg.nterms(); ++t) row[index.at(mg.monomial(t))] = mg.coeff(t);
            rows.push_back(std::move(row));
        }
    }
    return BigInt(basis.size()) - BigInt(span_rank(F, rows));
}

long long chi_smooth_ci(const std::vector<int>& degrees, int ambient_n) {
    // c(T_X) = (1+h)^{n+1} / prod(1 + d_i h); chi = deg prod(d_i) * [h^3]
    // series arithmetic truncated at h^3 over Q
    auto mul_trunc = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r(4, Rat(0));
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    std::vector<Rat> acc{Rat(1), Rat(0), Rat(0), Rat(0)};
    // (1+h)^{n+1}
    std::vector<Rat> onep{Rat(1), Rat(1), Rat(0), Rat(0)};
    for (int i = 0; i < ambient_n + 1; ++i) acc = mul_trunc(acc, onep);
    for (int d : degrees) {
        // 1/(1+dh) = 1 - dh + d^2 h^2 - d^3 h^3
        std::vector<Rat> inv{Rat(1), Rat(-d), Rat((long long)d * d),
                             Rat(-(long long)d * d * d)};
        acc = mul_trunc(acc, inv);
    }
    Rat chi = acc[3];
    for (int d : degrees) chi *= d;
    if (denominator(chi) != 1) throw Error("chi not integral");
    return (long long)numerator(chi).convert_to<long long>();
}

long long chi_small_resolution(long long chi_smooth, long long node_count) {
    if (node_count < 0) throw BadParameter("node count must be >= 0");
    return chi_smooth + 2 * node_count;
}

}  // namespace abelcy
