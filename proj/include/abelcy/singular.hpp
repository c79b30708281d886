#ifndef ABELCY_SINGULAR_HPP
#define ABELCY_SINGULAR_HPP

#include <optional>

#include "abelcy/hilbert.hpp"
#include "abelcy/pmatrix.hpp"

namespace abelcy {

struct SingularOptions {
    size_t max_minors = 400;   // polynomial budget for the augmented ideal
    bool allow_sampling = false;  // sample minors in seeded batches when over budget
    size_t batch = 64;
    uint64_t seed = 1;
    Budget gb_budget;
    const GBCache* cache = nullptr;
};

struct SingularSchemeReport {
    std::vector<Polynomial> augmented;  // generators + (selected) Jacobian minors
    GroebnerBasis gb;
    HilbertData hilbert;
    size_t minor_count_total = 0;
    size_t minors_used = 0;
    bool sampled = false;  // subset of the minors used (upper-bound scheme)
};

// Augment I with the codim x codim minors of its Jacobian and measure the
// result.  When the full minor count exceeds the budget: throws
// ResourceBudgetExceeded unless sampling is enabled, in which case seeded
// batches of minors are added until the scheme dimension stops dropping.
SingularSchemeReport singular_scheme(const Ideal& I, size_t codim, const SingularOptions& opt = {});

struct RankCertificate {
    bool on_variety = false;
    bool singular = false;
    size_t jacobian_rank = 0;
};

// true iff P lies on V(I) and the numeric Jacobian at P has rank < codim.
RankCertificate singular_at(const Ideal& I, const ProjectivePoint& P, size_t codim);

// T^1 kernel dimension for a nodal variety cut by equal-degree generators
// (the h^{1,2} of its projective small resolution).
long long t1_defect(const Ideal& I, const SingularSchemeReport& S, const Budget& budget = {},
                    uint64_t seed = 1);

}  // namespace abelcy

#endif
