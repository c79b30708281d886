#ifndef ABELCY_COEFFS_HPP
#define ABELCY_COEFFS_HPP

#include <variant>
#include <vector>

#include "abelcy/field.hpp"

namespace abelcy {

// Coefficient storage: dense residues for F_p, exact rationals for Q.
// Polynomials and matrices keep one of these alongside their structural data
// so that inner loops are monomorphic after a single dispatch.
using CoeffVec = std::variant<std::vector<uint64_t>, std::vector<Rat>>;

struct FpOps {
    using C = uint64_t;
    uint64_t p;
    static constexpr FieldKind kind = FieldKind::prime;
    C zero() const { return 0; }
    C one() const { return 1 % p; }
    bool is_zero(C a) const { return a == 0; }
    C add(C a, C b) const {
        C s = a + b;
        return s >= p ? s - p : s;
    }
    C sub(C a, C b) const { return a >= b ? a - b : a + p - b; }
    C neg(C a) const { return a ? p - a : 0; }
    C mul(C a, C b) const { return mulmod_u64(a, b, p); }
    C inv(C a) const { return invmod_u64(a, p); }
    C div(C a, C b) const { return mul(a, inv(b)); }
    C from_scalar(const Scalar& s) const { return s.u; }
    Scalar to_scalar(C a) const { return Scalar::fp(a); }
    C from_int(long long v) const {
        long long m = v % (long long)p;
        if (m < 0) m += (long long)p;
        return (C)m;
    }
};

struct RatOps {
    using C = Rat;
    static constexpr FieldKind kind = FieldKind::rational;
    C zero() const { return Rat(0); }
    C one() const { return Rat(1); }
    bool is_zero(const C& a) const { return a.is_zero(); }
    C add(const C& a, const C& b) const { return a + b; }
    C sub(const C& a, const C& b) const { return a - b; }
    C neg(const C& a) const { return -a; }
    C mul(const C& a, const C& b) const { return a * b; }
    C inv(const C& a) const {
        if (a.is_zero()) throw DivisionByZero();
        return Rat(1) / a;
    }
    C div(const C& a, const C& b) const { return a * inv(b); }
    C from_scalar(const Scalar& s) const { return s.q; }
    Scalar to_scalar(C a) const { return Scalar::rat(std::move(a)); }
    C from_int(long long v) const { return Rat(v); }
};

template <class Fn>
decltype(auto) with_ops(const Field& f, Fn&& fn) {
    if (f.is_prime_field()) return fn(FpOps{f.modulus()});
    return fn(RatOps{});
}

template <class Ops>
std::vector<typename Ops::C>& coeffs_of(CoeffVec& v) {
    return std::get<std::vector<typename Ops::C>>(v);
}
template <class Ops>
const std::vector<typename Ops::C>& coeffs_of(const CoeffVec& v) {
    return std::get<std::vector<typename Ops::C>>(v);
}

inline CoeffVec make_coeffs(const Field& f) {
    if (f.is_prime_field()) return std::vector<uint64_t>{};
    return std::vector<Rat>{};
}

inline size_t coeffs_size(const CoeffVec& v) {
    return std::visit([](const auto& x) { return x.size(); }, v);
}

}  // namespace abelcy

#endif
