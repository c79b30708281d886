#ifndef ABELCY_SOLVE_HPP
#define ABELCY_SOLVE_HPP

#include <vector>

#include "abelcy/groebner.hpp"

namespace abelcy {

// Roots in F_p of a dense univariate polynomial (coefficients low-to-high),
// via gcd with x^p - x and Cantor-Zassenhaus equal-degree splitting.
std::vector<uint64_t> univariate_roots(std::vector<uint64_t> coeffs, uint64_t p, uint64_t seed = 1);

// All F_p-rational points of the zero-dimensional projective scheme V(I),
// found chart by chart with lex Groebner bases and back-substitution.
// Returns at most max_points points; non-rational points are not reported.
std::vector<ProjectivePoint> zero_dim_solve(const Ideal& I, size_t max_points = 10000,
                                            uint64_t seed = 1, const Budget& budget = {});

}  // namespace abelcy

#endif
