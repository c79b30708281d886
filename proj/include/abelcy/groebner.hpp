#ifndef ABELCY_GROEBNER_HPP
#define ABELCY_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelcy/poly.hpp"

namespace abelcy {

struct Budget {
    size_t max_pairs = 4000000;  // S-pairs processed before giving up
    int max_degree = 0;          // 0 = unbounded; otherwise refuse pairs above this degree
    size_t max_basis = 200000;
};

// Homogeneous ideal: nonzero homogeneous generators over one ring.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens, bool require_homogeneous = true);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    Ideal plus(const std::vector<Polynomial>& more) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, uint64_t provenance);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    uint64_t provenance_hash() const { return provenance_; }
    bool is_unit_ideal() const;  // basis == {1}

private:
    RingPtr ring_;
    std::vector<Polynomial> basis_;
    uint64_t provenance_ = 0;
};

uint64_t ideal_provenance_hash(const RingPtr& ring, const std::vector<Polynomial>& gens);

// Reduced Groebner basis by Buchberger's algorithm with the normal selection
// strategy and Gebauer-Moller pair pruning; deterministic for fixed input.
GroebnerBasis buchberger(const Ideal& I, const Budget& budget = Budget{});
// same, without the homogeneity requirement (used on dehomogenized systems)
GroebnerBasis buchberger_raw(RingPtr ring, std::vector<Polynomial> gens,
                             const Budget& budget = Budget{});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
bool member(const Polynomial& f, const GroebnerBasis& G);

// every S-polynomial of basis pairs reduces to zero (correctness audit)
bool spoly_audit(const GroebnerBasis& G, size_t sample = 0, uint64_t seed = 1);

// --- disk cache -----------------------------------------------------------

// One basis per file under dir, keyed by the provenance hash; a cache hit is
// verified by re-checking one seeded random S-pair.
class GBCache {
public:
    explicit GBCache(std::string dir) : dir_(std::move(dir)) {}
    const std::string& dir() const { return dir_; }

    std::optional<GroebnerBasis> load(const RingPtr& ring,
                                      const std::vector<Polynomial>& gens) const;
    void store(const Ideal& I, const GroebnerBasis& G) const;
    std::vector<std::string> list() const;
    void clear() const;

private:
    std::string dir_;
};

// buchberger with optional caching (cache may be null)
GroebnerBasis buchberger_cached(const Ideal& I, const Budget& budget, const GBCache* cache);

}  // namespace abelcy

#endif
