#ifndef ABELCY_FIELD_HPP
#define ABELCY_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "abelcy/errors.hpp"

namespace abelcy {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { prime, rational };

// 64-bit deterministic Miller-Rabin.
bool is_prime_u64(uint64_t n);

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p);
uint64_t invmod_u64(uint64_t a, uint64_t p);

// A scalar value together with the kind of field it lives in.  Prime-field
// residues are kept normalized to [0,p); rationals in lowest terms with
// positive denominator (cpp_rational maintains that itself).
struct Scalar {
    FieldKind kind = FieldKind::prime;
    uint64_t u = 0;
    Rat q;

    static Scalar fp(uint64_t residue) { return Scalar{FieldKind::prime, residue, Rat()}; }
    static Scalar rat(Rat value) { return Scalar{FieldKind::rational, 0, std::move(value)}; }

    bool is_zero() const { return kind == FieldKind::prime ? u == 0 : q.is_zero(); }
    bool operator==(const Scalar& o) const {
        return kind == o.kind && (kind == FieldKind::prime ? u == o.u : q == o.q);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
};

// Field descriptor: F_p for p < 2^63 (primality checked at construction) or Q.
class Field {
public:
    static Field prime(uint64_t p);
    static Field rationals();

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::prime; }
    uint64_t modulus() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_rat(const Rat& v) const;  // reduces mod p for prime fields

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar inv(const Scalar& a) const;  // throws DivisionByZero on 0
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar pow(const Scalar& a, long long e) const;

    // Scalar text format: decimal residue for F_p, "a/b" (or "a") for Q.
    std::string format(const Scalar& a) const;
    Scalar parse(const std::string& text) const;

    // Smallest generator of F_p^* (kind=prime only); cached after first call.
    uint64_t primitive_root() const;

    // Primitive n-th root of unity, deterministic: g^((p-1)/n) for the
    // smallest primitive root g.  Over Q only n=1,2 exist.
    Scalar root_of_unity(uint64_t n) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    FieldKind kind_ = FieldKind::rational;
    uint64_t p_ = 0;
    mutable uint64_t root_ = 0;  // cached primitive root, 0 = not yet computed
};

// Smallest prime p > 10^4 with p = 1 (mod 840); 840 = lcm(4,5,6,7,8,10), so
// F_p contains primitive d-th roots for every level the experiments use.
uint64_t default_experiment_prime();

}  // namespace abelcy

#endif
