#ifndef ABELCY_HILBERT_HPP
#define ABELCY_HILBERT_HPP

#include <optional>
#include <vector>

#include "abelcy/groebner.hpp"

namespace abelcy {

// Hilbert data of a homogeneous ideal, read off the lead-term ideal of a
// Groebner basis.  Degree and dimension come from the Hilbert polynomial and
// are therefore insensitive to saturation.
struct HilbertData {
    std::vector<BigInt> numerator;  // N(t) with HS = N(t) / (1-t)^nvars
    int dimension = -1;             // projective dimension; -1 = empty scheme
    BigInt degree = 0;              // leading coefficient * dim! ; 0 for empty
    std::vector<Rat> hp;            // Hilbert polynomial coefficients, hp[k] t^k
    std::optional<BigInt> sectional_genus;  // for threefolds

    Rat hp_eval(long long t) const;
};

HilbertData hilbert(const GroebnerBasis& G);

// Hilbert series numerator of a monomial ideal (exposed for tests).
std::vector<BigInt> hilbert_numerator(std::vector<Monomial> gens, int nvars);

// coefficient of t^d in the Hilbert series N(t)/(1-t)^nvars
BigInt hilbert_series_coefficient(const HilbertData& h, int nvars, int d);

// dim_k (R/I)_d computed directly: dim R_d minus the rank of the coefficient
// matrix of all monomial multiples of the generators in degree d.  Exact
// cross-check of the series; cost grows quickly with d.
BigInt hilbert_function_direct(const Ideal& I, int d);

// Euler characteristic of a smooth complete intersection threefold of the
// given multidegrees in P^n (Chern class coefficient extraction).
long long chi_smooth_ci(const std::vector<int>& degrees, int ambient_n);

// chi of a small resolution: each ordinary double point adds 2.
long long chi_small_resolution(long long chi_smooth, long long node_count);

}  // namespace abelcy

#endif
