#ifndef ABELCY_MONOMIAL_HPP
#define ABELCY_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

#include "abelcy/errors.hpp"

namespace abelcy {

// Hard cap on ring size; the largest ring in the experiments has 14
// variables (M_5(x,y) with symbolic y in P^3_-).
inline constexpr int kMaxVars = 16;

struct Monomial {
    std::array<uint8_t, kMaxVars> e{};
    uint16_t deg = 0;

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, uint8_t k = 1) {
        Monomial m;
        m.e[(size_t)i] = k;
        m.deg = k;
        return m;
    }

    bool is_one() const { return deg == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[(size_t)i] = (uint8_t)(e[(size_t)i] + o.e[(size_t)i]);
        r.deg = (uint16_t)(deg + o.deg);
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[(size_t)i] > o.e[(size_t)i]) return false;
        return true;
    }

    // quotient o / this; caller guarantees divisibility
    Monomial div_into(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[(size_t)i] = (uint8_t)(o.e[(size_t)i] - e[(size_t)i]);
        r.deg = (uint16_t)(o.deg - deg);
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        uint16_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[(size_t)i] = e[(size_t)i] > o.e[(size_t)i] ? e[(size_t)i] : o.e[(size_t)i];
            d = (uint16_t)(d + r.e[(size_t)i]);
        }
        r.deg = d;
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[(size_t)i] && o.e[(size_t)i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const {
        return deg == o.deg && std::memcmp(e.data(), o.e.data(), kMaxVars) == 0;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < kMaxVars; ++i) {
            h ^= e[(size_t)i];
            h *= 1099511628211ull;
        }
        return (size_t)h;
    }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { grevlex, lex, block_elim };

struct Order {
    OrderKind kind = OrderKind::grevlex;
    int split = 0;  // block_elim: first block is vars [0, split)

    // three-way comparison: negative / 0 / positive as a <=> b
    int cmp(const Monomial& a, const Monomial& b, int nvars) const;
    bool less(const Monomial& a, const Monomial& b, int nvars) const { return cmp(a, b, nvars) < 0; }
    bool greater(const Monomial& a, const Monomial& b, int nvars) const { return cmp(a, b, nvars) > 0; }
};

inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.e[(size_t)i];
        db += b.e[(size_t)i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a.e[(size_t)i] != b.e[(size_t)i]) return a.e[(size_t)i] > b.e[(size_t)i] ? -1 : 1;
    }
    return 0;
}

inline int Order::cmp(const Monomial& a, const Monomial& b, int nvars) const {
    switch (kind) {
        case OrderKind::grevlex: {
            if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
            for (int i = nvars - 1; i >= 0; --i)
                if (a.e[(size_t)i] != b.e[(size_t)i]) return a.e[(size_t)i] > b.e[(size_t)i] ? -1 : 1;
            return 0;
        }
        case OrderKind::lex: {
            for (int i = 0; i < nvars; ++i)
                if (a.e[(size_t)i] != b.e[(size_t)i]) return a.e[(size_t)i] < b.e[(size_t)i] ? -1 : 1;
            return 0;
        }
        case OrderKind::block_elim: {
            if (int c = cmp_grevlex_range(a, b, 0, split)) return c;
            return cmp_grevlex_range(a, b, split, nvars);
        }
    }
    return 0;
}

}  // namespace abelcy

#endif
