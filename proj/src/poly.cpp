#include "abelcy/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace abelcy {

namespace {

template <class Ops>
struct Kernel {
    using C = typename Ops::C;
    const Ring& R;
    Ops ops;

    bool less(const Monomial& a, const Monomial& b) const { return R.cmp(a, b) < 0; }

    // sort descending, merge duplicates, drop zeros
    void normalize(std::vector<Monomial>& m, std::vector<C>& c) const {
        std::vector<size_t> idx(m.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return R.cmp(m[a], m[b]) > 0; });
        std::vector<Monomial> nm;
        std::vector<C> nc;
        nm.reserve(m.size());
        nc.reserve(m.size());
        for (size_t k = 0; k < idx.size(); ++k) {
            const Monomial& mk = m[idx[k]];
            if (!nm.empty() && nm.back() == mk) {
                nc.back() = ops.add(nc.back(), c[idx[k]]);
                if (ops.is_zero(nc.back())) {
                    nm.pop_back();
                    nc.pop_back();
                }
            } else {
                nm.push_back(mk);
                nc.push_back(c[idx[k]]);
            }
        }
        m = std::move(nm);
        c = std::move(nc);
    }

    // r = a + s * x^shift * b   (merge of sorted streams)
    void add_scaled(const std::vector<Monomial>& am, const std::vector<C>& ac,
                    const std::vector<Monomial>& bm, const std::vector<C>& bc, const C& s,
                    const Monomial& shift, std::vector<Monomial>& rm, std::vector<C>& rc) const {
        rm.clear();
        rc.clear();
        rm.reserve(am.size() + bm.size());
        rc.reserve(am.size() + bm.size());
        size_t i = 0, j = 0;
        while (i < am.size() || j < bm.size()) {
            if (j == bm.size()) {
                rm.push_back(am[i]);
                rc.push_back(ac[i]);
                ++i;
                continue;
            }
            Monomial mb = bm[j] * shift;
            if (i == am.size()) {
                C v = ops.mul(s, bc[j]);
                if (!ops.is_zero(v)) {
                    rm.push_back(mb);
                    rc.push_back(std::move(v));
                }
                ++j;
                continue;
            }
            int cpr = R.cmp(am[i], mb);
            if (cpr > 0) {
                rm.push_back(am[i]);
                rc.push_back(ac[i]);
                ++i;
            } else if (cpr < 0) {
                C v = ops.mul(s, bc[j]);
                if (!ops.is_zero(v)) {
                    rm.push_back(mb);
                    rc.push_back(std::move(v));
                }
                ++j;
            } else {
                C v = ops.add(ac[i], ops.mul(s, bc[j]));
                if (!ops.is_zero(v)) {
                    rm.push_back(am[i]);
                    rc.push_back(std::move(v));
                }
                ++i;
                ++j;
            }
        }
    }

    void mul(const std::vector<Monomial>& am, const std::vector<C>& ac,
             const std::vector<Monomial>& bm, const std::vector<C>& bc, std::vector<Monomial>& rm,
             std::vector<C>& rc) const {
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(am.size() * bm.size() / 2 + 4);
        for (size_t i = 0; i < am.size(); ++i) {
            for (size_t j = 0; j < bm.size(); ++j) {
                Monomial m = am[i] * bm[j];
                C v = ops.mul(ac[i], bc[j]);
                auto it = acc.find(m);
                if (it == acc.end()) {
                    if (!ops.is_zero(v)) acc.emplace(m, std::move(v));
                } else {
                    it->second = ops.add(it->second, v);
                    if (ops.is_zero(it->second)) acc.erase(it);
                }
            }
        }
        rm.clear();
        rc.clear();
        rm.reserve(acc.size());
        rc.reserve(acc.size());
        for (auto& kv : acc) {
            rm.push_back(kv.first);
            rc.push_back(std::move(kv.second));
        }
        std::vector<size_t> idx(rm.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](size_t a, size_t b) { return R.cmp(rm[a], rm[b]) > 0; });
        std::vector<Monomial> sm(rm.size());
        std::vector<C> sc(rc.size());
        for (size_t k = 0; k < idx.size(); ++k) {
            sm[k] = rm[idx[k]];
            sc[k] = std::move(rc[idx[k]]);
        }
        rm = std::move(sm);
        rc = std::move(sc);
    }
};

template <class Fn>
decltype(auto) dispatch2(const Polynomial& a, Fn&& fn) {
    return with_ops(a.ring()->field(), std::forward<Fn>(fn));
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Scalar& s) {
    return term(std::move(ring), Monomial::one(), s);
}

Polynomial Polynomial::from_int(RingPtr ring, long long v) {
    Scalar s = ring->field().from_int(v);
    return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw UnknownVariable();
    Scalar s = ring->field().one();
    return term(std::move(ring), Monomial::var(i), s);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Scalar& s) {
    Polynomial p(ring);
    if (s.is_zero()) return p;
    with_ops(ring->field(), [&](auto ops) {
        p.m_.push_back(m);
        coeffs_of<decltype(ops)>(p.c_).push_back(ops.from_scalar(s));
    });
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<std::pair<Monomial, Scalar>> terms) {
    Polynomial p(ring);
    with_ops(ring->field(), [&](auto ops) {
        using OpsT = decltype(ops);
        auto& cs = coeffs_of<OpsT>(p.c_);
        for (auto& [m, s] : terms) {
            p.m_.push_back(m);
            cs.push_back(ops.from_scalar(s));
        }
        Kernel<OpsT>{*ring, ops}.normalize(p.m_, cs);
    });
    return p;
}

Scalar Polynomial::coeff(size_t i) const {
    return dispatch2(*this, [&](auto ops) {
        return ops.to_scalar(coeffs_of<decltype(ops)>(c_)[i]);
    });
}

Scalar Polynomial::coeff_of(const Monomial& m) const {
    for (size_t i = 0; i < m_.size(); ++i)
        if (m_[i] == m) return coeff(i);
    return ring_->field().zero();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& m : m_) d = std::max(d, (int)m.deg);
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (m_.empty()) return true;
    for (const auto& m : m_)
        if (m.deg != m_[0].deg) return false;
    return true;
}

std::optional<std::pair<int, int>> Polynomial::bidegree() const {
    int split = ring_->bigrade_split();
    if (split <= 0) throw BadParameter("ring has no bigrading split");
    if (m_.empty()) return std::make_pair(0, 0);
    auto block_deg = [&](const Monomial& m) {
        int d1 = 0;
        for (int i = 0; i < split; ++i) d1 += m.e[(size_t)i];
        return std::make_pair(d1, (int)m.deg - d1);
    };
    auto d0 = block_deg(m_[0]);
    for (const auto& m : m_)
        if (block_deg(m) != d0) return std::nullopt;
    return d0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*this, o);
    Polynomial r(ring_);
    dispatch2(*this, [&](auto ops) {
        using OpsT = decltype(ops);
        Kernel<OpsT>{*ring_, ops}.add_scaled(m_, coeffs_of<OpsT>(c_), o.m_, coeffs_of<OpsT>(o.c_),
                                             ops.one(), Monomial::one(), r.m_,
                                             coeffs_of<OpsT>(r.c_));
    });
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(*this, o);
    Polynomial r(ring_);
    dispatch2(*this, [&](auto ops) {
        using OpsT = decltype(ops);
        Kernel<OpsT>{*ring_, ops}.add_scaled(m_, coeffs_of<OpsT>(c_), o.m_, coeffs_of<OpsT>(o.c_),
                                             ops.neg(ops.one()), Monomial::one(), r.m_,
                                             coeffs_of<OpsT>(r.c_));
    });
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.m_ = m_;
    dispatch2(*this, [&](auto ops) {
        using OpsT = decltype(ops);
        auto& rc = coeffs_of<OpsT>(r.c_);
        const auto& ac = coeffs_of<OpsT>(c_);
        rc.reserve(ac.size());
        for (const auto& v : ac) rc.push_back(ops.neg(v));
    });
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(*this, o);
    Polynomial r(ring_);
    dispatch2(*this, [&](auto ops) {
        using OpsT = decltype(ops);
        Kernel<OpsT>{*ring_, ops}.mul(m_, coeffs_of<OpsT>(c_), o.m_, coeffs_of<OpsT>(o.c_), r.m_,
                                      coeffs_of<OpsT>(r.c_));
    });
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_) || m_.size() != o.m_.size()) return false;
    if (m_ != o.m_) return false;
    return c_ == o.c_;
}

Polynomial Polynomial::scaled(const Scalar& s) const {
    Polynomial r(ring_);
    if (s.is_zero()) return r;
    dispatch2(*this, [&](auto ops) {
        using OpsT = decltype(ops);
        auto sv = ops.from_scalar(s);
        r.m_ = m_;
        auto& rc = coeffs_of<OpsT>(r.c_);
        const auto& ac = coeffs_of<OpsT>(c_);
        rc.reserve(ac.size());
        for (const auto& v : ac) rc.push_back(ops.mul(v, sv));
    });
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw BadParameter("negative power");
    Polynomial r = Polynomial::from_int(ring_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) r = r * base;
        if (k >>= 1) base = base * base;
    }
    return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Scalar& s) const {
    Polynomial r(ring_);
    if (s.is_zero()) return r;
    dispatch2(*this, [&](auto ops) {
        using OpsT = decltype(ops);
        auto sv = ops.from_scalar(s);
        r.m_.reserve(m_.size());
        auto& rc = coeffs_of<OpsT>(r.c_);
        const auto& ac = coeffs_of<OpsT>(c_);
        for (size_t i = 0; i < m_.size(); ++i) {
            auto v = ops.mul(ac[i], sv);
            if (ops.is_zero(v)) continue;
            r.m_.push_back(m_[i] * m);
            rc.push_back(std::move(v));
        }
    });
    return r;
}

Polynomial Polynomial::partial(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw UnknownVariable();
    Polynomial r(ring_);
    dispatch2(*this, [&](auto ops) {
        using OpsT = decltype(ops);
        auto& rc = coeffs_of<OpsT>(r.c_);
        const auto& ac = coeffs_of<OpsT>(c_);
        for (size_t i = 0; i < m_.size(); ++i) {
            uint8_t e = m_[i].e[(size_t)var];
            if (!e) continue;
            auto v = ops.mul(ac[i], ops.from_int(e));
            if (ops.is_zero(v)) continue;  // characteristic divides the exponent
            Monomial m = m_[i];
            m.e[(size_t)var] = (uint8_t)(e - 1);
            m.deg -= 1;
            r.m_.push_back(m);
            rc.push_back(std::move(v));
        }
        // order is preserved termwise for grevlex only within same degree;
        // after differentiation the relative order can change, so re-sort.
        Kernel<OpsT>{*ring_, ops}.normalize(r.m_, rc);
    });
    return r;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
    if ((int)point.size() != ring_->nvars()) throw ArityMismatch();
    const Field& F = ring_->field();
    return dispatch2(*this, [&](auto ops) -> Scalar {
        using OpsT = decltype(ops);
        using C = typename OpsT::C;
        int n = ring_->nvars();
        // per-variable power tables
        std::vector<std::vector<C>> pw((size_t)n);
        for (int v = 0; v < n; ++v) {
            uint8_t maxe = 0;
            for (const auto& m : m_) maxe = std::max(maxe, m.e[(size_t)v]);
            auto& t = pw[(size_t)v];
            t.resize((size_t)maxe + 1);
            t[0] = ops.one();
            C base = ops.from_scalar(point[(size_t)v]);
            for (int k = 1; k <= maxe; ++k) t[(size_t)k] = ops.mul(t[(size_t)k - 1], base);
        }
        C acc = ops.zero();
        const auto& ac = coeffs_of<OpsT>(c_);
        for (size_t i = 0; i < m_.size(); ++i) {
            C t = ac[i];
            for (int v = 0; v < n; ++v) {
                uint8_t e = m_[i].e[(size_t)v];
                if (e) t = ops.mul(t, pw[(size_t)v][(size_t)e]);
            }
            acc = ops.add(acc, t);
        }
        (void)F;
        return ops.to_scalar(acc);
    });
}

Polynomial Polynomial::compose(RingPtr target, std::span<const Polynomial> images) const {
    if ((int)images.size() != ring_->nvars()) throw ArityMismatch();
    for (const auto& g : images)
        if (!same_ring(g.ring(), target)) throw RingMismatch();
    Polynomial acc = Polynomial::zero(target);
    // memoized powers per variable
    std::vector<std::vector<Polynomial>> pw(images.size());
    auto power = [&](int v, int e) -> const Polynomial& {
        auto& t = pw[(size_t)v];
        if (t.empty()) t.push_back(Polynomial::from_int(target, 1));
        while ((int)t.size() <= e) t.push_back(t.back() * images[(size_t)v]);
        return t[(size_t)e];
    };
    for (size_t i = 0; i < m_.size(); ++i) {
        Polynomial t = Polynomial::constant(target, target->field().from_rat(Rat(0)));
        bool first = true;
        for (int v = 0; v < ring_->nvars(); ++v) {
            uint8_t e = m_[i].e[(size_t)v];
            if (!e) continue;
            t = first ? power(v, e) : t * power(v, e);
            first = false;
        }
        Scalar cv = coeff(i);
        Scalar mapped = cv.kind == FieldKind::rational && target->field().is_prime_field()
                            ? target->field().from_rat(cv.q)
                            : cv;
        if (first) {
            acc = acc + Polynomial::constant(target, mapped);
        } else {
            acc = acc + t.scaled(mapped);
        }
    }
    return acc;
}

Polynomial Polynomial::linear_substitute(const std::vector<std::vector<Scalar>>& M) const {
    int n = ring_->nvars();
    if ((int)M.size() != n) throw ArityMismatch();
    // invertibility check over the base field
    {
        const Field& F = ring_->field();
        std::vector<std::vector<Scalar>> A = M;
        int rank = 0;
        for (int col = 0; col < n && rank < n; ++col) {
            int piv = -1;
            for (int r = rank; r < n; ++r)
                if (!A[(size_t)r][(size_t)col].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(A[(size_t)piv], A[(size_t)rank]);
            Scalar ip = F.inv(A[(size_t)rank][(size_t)col]);
            for (int c = 0; c < n; ++c) A[(size_t)rank][(size_t)c] = F.mul(A[(size_t)rank][(size_t)c], ip);
            for (int r = 0; r < n; ++r) {
                if (r == rank || A[(size_t)r][(size_t)col].is_zero()) continue;
                Scalar f = A[(size_t)r][(size_t)col];
                for (int c = 0; c < n; ++c)
                    A[(size_t)r][(size_t)c] =
                        F.sub(A[(size_t)r][(size_t)c], F.mul(f, A[(size_t)rank][(size_t)c]));
            }
            ++rank;
        }
        if (rank != n) throw SingularMatrix();
    }
    std::vector<Polynomial> images;
    images.reserve((size_t)n);
    for (int i = 0; i < n; ++i) {
        Polynomial li(ring_);
        for (int j = 0; j < n; ++j) {
            if (M[(size_t)i][(size_t)j].is_zero()) continue;
            li = li + Polynomial::term(ring_, Monomial::var(j), M[(size_t)i][(size_t)j]);
        }
        images.push_back(li);
    }
    return compose(ring_, images);
}

Polynomial Polynomial::renamed(RingPtr target, std::span<const int> image) const {
    if ((int)image.size() != ring_->nvars()) throw ArityMismatch();
    Polynomial r(target);
    dispatch2(*this, [&](auto ops) {
        using OpsT = decltype(ops);
        auto& rc = coeffs_of<OpsT>(r.c_);
        const auto& ac = coeffs_of<OpsT>(c_);
        for (size_t i = 0; i < m_.size(); ++i) {
            Monomial m;
            for (int v = 0; v < ring_->nvars(); ++v) {
                uint8_t e = m_[i].e[(size_t)v];
                if (!e) continue;
                int t = image[(size_t)v];
                if (t < 0 || t >= target->nvars()) throw UnknownVariable();
                m.e[(size_t)t] = (uint8_t)(m.e[(size_t)t] + e);
            }
            m.deg = m_[i].deg;
            r.m_.push_back(m);
            rc.push_back(ac[i]);
        }
        Kernel<OpsT>{*target, ops}.normalize(r.m_, rc);
    });
    return r;
}

Polynomial Polynomial::with_ring(RingPtr target) const {
    if (target->nvars() != ring_->nvars() || !(target->field() == ring_->field()))
        throw RingMismatch();
    Polynomial r(target);
    r.m_ = m_;
    r.c_ = c_;
    dispatch2(*this, [&](auto ops) {
        using OpsT = decltype(ops);
        Kernel<OpsT>{*target, ops}.normalize(r.m_, coeffs_of<OpsT>(r.c_));
    });
    return r;
}

bool Polynomial::divisible_by_monomial(const Monomial& m) const {
    for (const auto& t : m_)
        if (!m.divides(t)) return false;
    return true;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
    if (!divisible_by_monomial(m)) throw BadParameter("polynomial not divisible by monomial");
    Polynomial r(ring_);
    r.c_ = c_;
    r.m_.reserve(m_.size());
    for (const auto& t : m_) r.m_.push_back(m.div_into(t));
    return r;
}

Polynomial Polynomial::scale_terms(const std::function<Scalar(const Monomial&)>& fn) const {
    std::vector<std::pair<Monomial, Scalar>> terms;
    terms.reserve(m_.size());
    const Field& F = ring_->field();
    for (size_t i = 0; i < m_.size(); ++i) terms.emplace_back(m_[i], F.mul(coeff(i), fn(m_[i])));
    return from_terms(ring_, std::move(terms));
}

size_t Polynomial::hash() const {
    uint64_t h = 14695981039346656037ull;
    auto mix = [&h](uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (size_t i = 0; i < m_.size(); ++i) {
        mix(m_[i].hash());
        Scalar s = coeff(i);
        if (s.kind == FieldKind::prime) {
            mix(s.u);
        } else {
            mix(std::hash<std::string>{}(s.q.str()));
        }
    }
    return (size_t)h;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    std::string read_number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && isdigit((unsigned char)s[i])) ++i;
        if (start == i) throw SyntaxError("expected number", i);
        return s.substr(start, i - start);
    }
    std::string read_name() {
        skip_ws();
        size_t start = i;
        if (i >= s.size() || (!isalpha((unsigned char)s[i]) && s[i] != '_'))
            throw SyntaxError("expected variable", i);
        ++i;
        while (i < s.size() && (isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        return s.substr(start, i - start);
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, RingPtr ring) {
    Lexer lx{text};
    const Field& F = ring->field();
    std::vector<std::pair<Monomial, Scalar>> terms;
    bool first_term = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++lx.i;
        } else if (!first_term) {
            throw SyntaxError("expected '+' or '-' between terms", lx.i);
        }
        first_term = false;
        // term: optional coefficient, then '*'-separated powers
        Scalar coeff = F.one();
        bool saw_factor = false;
        Monomial mono;
        if (isdigit((unsigned char)lx.peek())) {
            std::string num = lx.read_number();
            std::string lit = num;
            if (lx.peek() == '/') {
                ++lx.i;
                lit += "/" + lx.read_number();
            }
            coeff = F.parse(lit);
            saw_factor = true;
        }
        while (true) {
            char p = lx.peek();
            if (p == '*') {
                ++lx.i;
            } else if (saw_factor) {
                // juxtaposition without '*' is allowed only before a variable
                if (!(isalpha((unsigned char)p) || p == '_')) break;
            }
            if (!(isalpha((unsigned char)lx.peek()) || lx.peek() == '_'))
                throw SyntaxError("expected variable after '*'", lx.i);
            size_t name_pos = lx.i;
            std::string name = lx.read_name();
            int vi = ring->var_index(name);
            if (vi < 0) throw UnknownVariable("unknown variable '" + name + "'");
            int exp = 1;
            if (lx.peek() == '^') {
                ++lx.i;
                exp = std::stoi(lx.read_number());
                if (exp < 0) throw SyntaxError("negative exponent", name_pos);
            }
            if ((int)mono.e[(size_t)vi] + exp > 255) throw SyntaxError("exponent overflow", name_pos);
            mono.e[(size_t)vi] = (uint8_t)(mono.e[(size_t)vi] + exp);
            mono.deg = (uint16_t)(mono.deg + exp);
            saw_factor = true;
        }
        if (!saw_factor) throw SyntaxError("empty term", lx.i);
        if (sign < 0) coeff = F.neg(coeff);
        terms.emplace_back(mono, coeff);
    }
    return from_terms(std::move(ring), std::move(terms));
}

std::string Polynomial::format() const {
    if (is_zero()) return "0";
    const Field& F = ring_->field();
    std::string out;
    for (size_t i = 0; i < m_.size(); ++i) {
        Scalar c = coeff(i);
        bool negative = false;
        if (c.kind == FieldKind::rational && c.q < 0) {
            negative = true;
            c = F.neg(c);
        }
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string cs = F.format(c);
        std::string ms = ring_->format_monomial(m_[i]);
        if (ms == "1") {
            out += cs;
        } else if (cs == "1") {
            out += ms;
        } else {
            out += cs + "*" + ms;
        }
    }
    return out;
}

// ------------------------------------------------------------- polar etc.

Polynomial polar(std::span<const Scalar> a, const Polynomial& F, int form_degree) {
    const RingPtr& R = F.ring();
    if ((int)a.size() != R->nvars()) throw ArityMismatch();
    std::vector<Polynomial> ap;
    ap.reserve(a.size());
    for (const auto& s : a) ap.push_back(Polynomial::constant(R, s));
    return polar(std::span<const Polynomial>(ap), F, form_degree);
}

Polynomial polar(std::span<const Polynomial> a, const Polynomial& F, int form_degree) {
    const RingPtr& R = F.ring();
    if ((int)a.size() != R->nvars()) throw ArityMismatch();
    if (F.is_zero()) return F;
    if (!F.is_homogeneous() || F.degree() < 1)
        throw BadParameter("polar needs homogeneous input of degree >= 1");
    int d = form_degree > 0 ? form_degree : F.degree();
    const Field& k = R->field();
    Scalar dinv;
    try {
        dinv = k.inv(k.from_int(d));
    } catch (const DivisionByZero&) {
        throw CharacteristicDividesDegree();
    }
    Polynomial acc = Polynomial::zero(R);
    for (int i = 0; i < R->nvars(); ++i) {
        if (a[(size_t)i].is_zero()) continue;
        acc = acc + a[(size_t)i] * F.partial(i);
    }
    return acc.scaled(dinv);
}

Polynomial polar_iter(std::span<const Polynomial> a, const Polynomial& F, int k,
                      int form_degree) {
    Polynomial r = F;
    int d = form_degree > 0 ? form_degree : F.degree();
    for (int i = 0; i < k; ++i) r = polar(a, r, d - i);
    return r;
}

std::vector<Monomial> graded_basis(const RingPtr& ring, int d,
                                   const std::function<bool(const Monomial&)>& keep) {
    if (d < 0) throw BadParameter("degree must be >= 0");
    std::vector<Monomial> out;
    Monomial m;
    int n = ring->nvars();
    // enumerate exponent vectors summing to d
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == n - 1) {
            m.e[(size_t)var] = (uint8_t)rem;
            m.deg = (uint16_t)d;
            if (!keep || keep(m)) out.push_back(m);
            m.e[(size_t)var] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            m.e[(size_t)var] = (uint8_t)e;
            rec(var + 1, rem - e);
        }
        m.e[(size_t)var] = 0;
    };
    if (d > 255) throw BadParameter("degree too large");
    rec(0, d);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& x, const Monomial& y) { return ring->cmp(x, y) > 0; });
    return out;
}

std::vector<Scalar> coefficient_vector(const Polynomial& p, std::span<const Monomial> basis) {
    std::unordered_map<Monomial, size_t, MonomialHash> where;
    where.reserve(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) where.emplace(basis[i], i);
    std::vector<Scalar> v(basis.size(), p.ring()->field().zero());
    for (size_t i = 0; i < p.nterms(); ++i) {
        auto it = where.find(p.monomial(i));
        if (it == where.end()) throw MonomialNotInBasis();
        v[it->second] = p.coeff(i);
    }
    return v;
}

// -------------------------------------------------------- projective point

ProjectivePoint::ProjectivePoint(RingPtr ring, std::vector<Scalar> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
    if ((int)coords_.size() != ring_->nvars()) throw ArityMismatch();
    const Field& F = ring_->field();
    size_t nz = coords_.size();
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (!coords_[i].is_zero()) {
            nz = i;
            break;
        }
    }
    if (nz == coords_.size()) throw BadParameter("projective point needs a nonzero coordinate");
    Scalar s = F.inv(coords_[nz]);
    for (auto& c : coords_) c = F.mul(c, s);
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const {
    return same_ring(ring_, o.ring_) && coords_.size() == o.coords_.size() &&
           std::equal(coords_.begin(), coords_.end(), o.coords_.begin());
}

size_t ProjectivePoint::hash() const {
    uint64_t h = 1099511628211ull;
    for (const auto& c : coords_) {
        uint64_t v = c.kind == FieldKind::prime ? c.u : std::hash<std::string>{}(c.q.str());
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return (size_t)h;
}

std::string ProjectivePoint::format() const {
    std::string s = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ":";
        s += ring_->field().format(coords_[i]);
    }
    return s + ")";
}

}  // namespace abelcy
