#include "abelcy/pmatrix.hpp"

#include <unordered_map>

namespace abelcy {

PolyMatrix::PolyMatrix(RingPtr ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, Polynomial(ring_)) {}

bool PolyMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool PolyMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i) {
        if (!at(i, i).is_zero()) return false;
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    }
    return true;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

PolyMatrix PolyMatrix::submatrix(std::span<const size_t> rows, std::span<const size_t> cols) const {
    PolyMatrix s(ring_, rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
    return s;
}

PolyMatrix PolyMatrix::plus(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw BadSize();
    PolyMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

PolyMatrix PolyMatrix::minus(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw BadSize();
    PolyMatrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

std::vector<Polynomial> PolyMatrix::apply(std::span<const Polynomial> v) const {
    if (v.size() != cols_) throw BadSize();
    std::vector<Polynomial> r(rows_, Polynomial(ring_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

FieldMatrix PolyMatrix::evaluate(std::span<const Scalar> point) const {
    FieldMatrix m(ring_->field(), rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evaluate(point);
    return m;
}

Polynomial PolyMatrix::det() const {
    if (rows_ != cols_) throw NotSquare();
    size_t n = rows_;
    if (n == 0) return Polynomial::from_int(ring_, 1);
    if (n > 12) throw BadSize("symbolic determinant limited to 12x12");
    // f(mask) = det of submatrix on rows [0, popcount) and columns in mask
    std::unordered_map<uint32_t, Polynomial> memo;
    std::function<Polynomial(uint32_t)> f = [&](uint32_t mask) -> Polynomial {
        if (mask == 0) return Polynomial::from_int(ring_, 1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        size_t row = (size_t)__builtin_popcount(mask) - 1;
        Polynomial acc(ring_);
        int sign = (row % 2 == 0) ? 1 : -1;  // cofactor sign of entry (row, first set column)
        for (size_t j = 0, seen = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const Polynomial& e = at(row, j);
            if (!e.is_zero()) {
                Polynomial sub = f(mask & ~(1u << j));
                Polynomial t = e * sub;
                acc = (sign > 0) ? acc + t : acc - t;
            }
            ++seen;
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return f((uint32_t)((1ull << n) - 1));
}

Polynomial PolyMatrix::pfaffian() const {
    if (rows_ != cols_) throw NotSquare();
    if (rows_ % 2 != 0) throw BadSize("pfaffian needs even size");
    if (!is_skew_symmetric()) throw NotSkewSymmetric();
    if (rows_ > 12) throw BadSize("symbolic pfaffian limited to 12x12");
    size_t n = rows_;
    if (n == 0) return Polynomial::from_int(ring_, 1);
    std::unordered_map<uint32_t, Polynomial> memo;
    std::function<Polynomial(uint32_t)> pf = [&](uint32_t mask) -> Polynomial {
        if (mask == 0) return Polynomial::from_int(ring_, 1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        size_t i = (size_t)__builtin_ctz(mask);
        Polynomial acc(ring_);
        int sign = 1;
        for (size_t j = i + 1; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const Polynomial& e = at(i, j);
            if (!e.is_zero()) {
                Polynomial sub = pf(mask & ~(1u << i) & ~(1u << j));
                Polynomial t = e * sub;
                acc = (sign > 0) ? acc + t : acc - t;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return pf((uint32_t)((1ull << n) - 1));
}

std::vector<std::vector<size_t>> subsets_lex(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) return out;
    std::vector<size_t> cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        // advance
        size_t i = k;
        while (i > 0) {
            --i;
            if (cur[i] != i + n - k) break;
            if (i == 0) return out;
        }
        if (cur[i] == i + n - k) return out;
        ++cur[i];
        for (size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

std::vector<Polynomial> PolyMatrix::minors(size_t k) const {
    if (k == 0 || k > rows_ || k > cols_) throw BadSize();
    auto rs = subsets_lex(rows_, k);
    auto cs = subsets_lex(cols_, k);
    std::vector<Polynomial> out;
    out.reserve(rs.size() * cs.size());
    for (const auto& r : rs)
        for (const auto& c : cs) out.push_back(submatrix(r, c).det());
    return out;
}

Polynomial PolyMatrix::minor(std::span<const size_t> rows, std::span<const size_t> cols) const {
    return submatrix(rows, cols).det();
}

std::vector<Polynomial> PolyMatrix::pfaffian_system() const {
    if (rows_ != cols_) throw NotSquare();
    if (rows_ % 2 == 0) throw EvenSize();
    if (!is_skew_symmetric()) throw NotSkewSymmetric();
    size_t n = rows_;
    std::vector<Polynomial> v;
    v.reserve(n);
    std::vector<size_t> keep;
    for (size_t i = 0; i < n; ++i) {
        keep.clear();
        for (size_t j = 0; j < n; ++j)
            if (j != i) keep.push_back(j);
        Polynomial p = submatrix(keep, keep).pfaffian();
        v.push_back(i % 2 == 0 ? p : -p);
    }
    return v;
}

PolyMatrix jacobian(std::span<const Polynomial> gens) {
    if (gens.empty()) throw BadSize("jacobian of empty generator list");
    RingPtr R = gens[0].ring();
    for (const auto& g : gens)
        if (!same_ring(g.ring(), R)) throw RingMismatch();
    PolyMatrix J(R, gens.size(), (size_t)R->nvars());
    for (size_t i = 0; i < gens.size(); ++i)
        for (int j = 0; j < R->nvars(); ++j) J.at(i, (size_t)j) = gens[i].partial(j);
    return J;
}

}  // namespace abelcy
