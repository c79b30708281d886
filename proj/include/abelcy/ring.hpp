#ifndef ABELCY_RING_HPP
#define ABELCY_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "abelcy/field.hpp"
#include "abelcy/monomial.hpp"

namespace abelcy {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Coordinate ring descriptor: base field, variables, active monomial order
// and an optional bigrading split (first block = vars [0, split)).
class Ring {
public:
    static RingPtr make(Field field, int nvars, Order order = Order{},
                        std::vector<std::string> names = {}, int bigrade_split = 0);

    // "F12601[x0..x7]", "Fp[x0..x7]" (p filled from default_p), "Q[x1,x2,x3,y1,y2,y3]"
    static RingPtr from_spec(const std::string& spec, uint64_t default_p, Order order = Order{});

    const Field& field() const { return field_; }
    int nvars() const { return nvars_; }
    const Order& order() const { return order_; }
    int bigrade_split() const { return split_; }
    const std::string& name(int i) const { return names_[(size_t)i]; }
    const std::vector<std::string>& names() const { return names_; }
    int var_index(const std::string& name) const;  // -1 if unknown

    RingPtr with_order(Order o) const;

    bool same_as(const Ring& o) const;

    int cmp(const Monomial& a, const Monomial& b) const { return order_.cmp(a, b, nvars_); }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    std::string format_monomial(const Monomial& m) const;

private:
    Field field_ = Field::rationals();
    int nvars_ = 0;
    Order order_;
    int split_ = 0;
    std::vector<std::string> names_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace abelcy

#endif
