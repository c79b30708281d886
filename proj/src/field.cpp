#include "abelcy/field.hpp"

#include <algorithm>

namespace abelcy {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return (uint64_t)((__uint128_t)a * b % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) {
    if (a == 0) throw DivisionByZero();
    // extended Euclid on signed 128-bit intermediates
    int64_t t = 0, newt = 1;
    int64_t r = (int64_t)p, newr = (int64_t)(a % p);
    while (newr != 0) {
        int64_t qq = r / newr;
        int64_t tmp = t - qq * newt;
        t = newt;
        newt = tmp;
        tmp = r - qq * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw DivisionByZero("element not invertible");
    if (t < 0) t += (int64_t)p;
    return (uint64_t)t;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic witness set for all n < 2^64
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Field Field::prime(uint64_t p) {
    if (p < 2 || p >= (1ull << 63) || !is_prime_u64(p))
        throw CompositeModulus("modulus " + std::to_string(p) + " is not prime");
    Field f;
    f.kind_ = FieldKind::prime;
    f.p_ = p;
    return f;
}

Field Field::rationals() {
    Field f;
    f.kind_ = FieldKind::rational;
    return f;
}

Scalar Field::zero() const {
    return kind_ == FieldKind::prime ? Scalar::fp(0) : Scalar::rat(Rat(0));
}

Scalar Field::one() const {
    return kind_ == FieldKind::prime ? Scalar::fp(1 % p_) : Scalar::rat(Rat(1));
}

Scalar Field::from_int(long long v) const {
    if (kind_ == FieldKind::rational) return Scalar::rat(Rat(v));
    long long m = v % (long long)p_;
    if (m < 0) m += (long long)p_;
    return Scalar::fp((uint64_t)m);
}

Scalar Field::from_rat(const Rat& v) const {
    if (kind_ == FieldKind::rational) return Scalar::rat(v);
    BigInt num = numerator(v), den = denominator(v);
    BigInt pb = p_;
    BigInt nm = num % pb;
    if (nm < 0) nm += pb;
    BigInt dm = den % pb;
    if (dm < 0) dm += pb;
    uint64_t n64 = nm.convert_to<uint64_t>();
    uint64_t d64 = dm.convert_to<uint64_t>();
    if (d64 == 0) throw DivisionByZero("denominator divisible by p");
    return Scalar::fp(mulmod_u64(n64, invmod_u64(d64, p_), p_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) {
        uint64_t s = a.u + b.u;
        return Scalar::fp(s >= p_ ? s - p_ : s);
    }
    return Scalar::rat(a.q + b.q);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) return Scalar::fp(a.u >= b.u ? a.u - b.u : a.u + p_ - b.u);
    return Scalar::rat(a.q - b.q);
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return Scalar::fp(a.u == 0 ? 0 : p_ - a.u);
    return Scalar::rat(-a.q);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) return Scalar::fp(mulmod_u64(a.u, b.u, p_));
    return Scalar::rat(a.q * b.q);
}

Scalar Field::inv(const Scalar& a) const {
    if (a.is_zero()) throw DivisionByZero();
    if (kind_ == FieldKind::prime) return Scalar::fp(invmod_u64(a.u, p_));
    return Scalar::rat(Rat(1) / a.q);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    if (kind_ == FieldKind::prime) return Scalar::fp(powmod_u64(a.u, (uint64_t)e, p_));
    Rat r(1), base = a.q;
    long long k = e;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return Scalar::rat(r);
}

std::string Field::format(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return std::to_string(a.u);
    if (denominator(a.q) == 1) return numerator(a.q).str();
    return numerator(a.q).str() + "/" + denominator(a.q).str();
}

Scalar Field::parse(const std::string& text) const {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return from_rat(Rat(BigInt(text)));
        BigInt n(text.substr(0, slash)), d(text.substr(slash + 1));
        if (d == 0) throw DivisionByZero();
        return from_rat(Rat(n, d));
    } catch (const std::exception& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw SyntaxError("bad scalar literal '" + text + "'", 0);
    }
}

uint64_t Field::primitive_root() const {
    if (kind_ != FieldKind::prime) throw NoSuchRoot("primitive root needs a prime field");
    if (root_) return root_;
    if (p_ == 2) return root_ = 1;
    // factor p-1 by trial division (p fits comfortably for the default prime range)
    uint64_t m = p_ - 1;
    std::vector<uint64_t> primes;
    for (uint64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            primes.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) primes.push_back(m);
    for (uint64_t g = 2; g < p_; ++g) {
        bool ok = true;
        for (uint64_t q : primes) {
            if (powmod_u64(g, (p_ - 1) / q, p_) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return root_ = g;
    }
    throw NoSuchRoot("no primitive root found");  // unreachable for prime p
}

Scalar Field::root_of_unity(uint64_t n) const {
    if (n == 0) throw NoSuchRoot("order must be positive");
    if (kind_ == FieldKind::rational) {
        if (n == 1) return Scalar::rat(Rat(1));
        if (n == 2) return Scalar::rat(Rat(-1));
        throw NoSuchRoot("Q has no primitive root of unity of order " + std::to_string(n));
    }
    if (n == 1) return one();
    if ((p_ - 1) % n != 0)
        throw NoSuchRoot("p = " + std::to_string(p_) + " is not 1 mod " + std::to_string(n));
    uint64_t g = primitive_root();
    return Scalar::fp(powmod_u64(g, (p_ - 1) / n, p_));
}

uint64_t default_experiment_prime() {
    for (uint64_t p = 10081;; p += 840) {
        if (is_prime_u64(p)) return p;
    }
}

}  // namespace abelcy
