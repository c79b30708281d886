#include "abelcy/fmatrix.hpp"

#include "abelcy/errors.hpp"

namespace abelcy {

FieldMatrix FieldMatrix::identity(Field f, size_t n) {
    FieldMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

FieldMatrix FieldMatrix::mul(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw BadSize();
    FieldMatrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = field_.add(r.at(i, j), field_.mul(at(i, k), o.at(k, j)));
        }
    return r;
}

std::vector<Scalar> FieldMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw BadSize();
    std::vector<Scalar> r(rows_, field_.zero());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
    return r;
}

size_t FieldMatrix::rref() {
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t piv = rows_;
        for (size_t r = rank; r < rows_; ++r) {
            if (!at(r, col).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == rows_) continue;
        if (piv != rank)
            for (size_t c = 0; c < cols_; ++c) std::swap(at(piv, c), at(rank, c));
        Scalar ip = field_.inv(at(rank, col));
        for (size_t c = col; c < cols_; ++c) at(rank, c) = field_.mul(at(rank, c), ip);
        for (size_t r = 0; r < rows_; ++r) {
            if (r == rank || at(r, col).is_zero()) continue;
            Scalar f = at(r, col);
            for (size_t c = col; c < cols_; ++c)
                at(r, c) = field_.sub(at(r, c), field_.mul(f, at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

size_t FieldMatrix::rank() const {
    FieldMatrix copy = *this;
    return copy.rref();
}

std::vector<std::vector<Scalar>> FieldMatrix::kernel() const {
    FieldMatrix m = *this;
    m.rref();
    // locate pivot columns
    std::vector<long> pivot_row(cols_, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        if (!m.at(r, c).is_zero()) {
            pivot_row[c] = (long)r;
            ++r;
        }
    }
    std::vector<std::vector<Scalar>> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (pivot_row[c] >= 0) continue;
        std::vector<Scalar> v(cols_, field_.zero());
        v[c] = field_.one();
        for (size_t cc = 0; cc < c; ++cc)
            if (pivot_row[cc] >= 0) v[cc] = field_.neg(m.at((size_t)pivot_row[cc], c));
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar FieldMatrix::det() const {
    if (rows_ != cols_) throw NotSquare();
    FieldMatrix m = *this;
    Scalar d = field_.one();
    for (size_t col = 0; col < cols_; ++col) {
        size_t piv = rows_;
        for (size_t r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows_) return field_.zero();
        if (piv != col) {
            for (size_t c = 0; c < cols_; ++c) std::swap(m.at(piv, c), m.at(col, c));
            d = field_.neg(d);
        }
        d = field_.mul(d, m.at(col, col));
        Scalar ip = field_.inv(m.at(col, col));
        for (size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Scalar f = field_.mul(m.at(r, col), ip);
            for (size_t c = col; c < cols_; ++c)
                m.at(r, c) = field_.sub(m.at(r, c), field_.mul(f, m.at(col, c)));
        }
    }
    return d;
}

size_t span_rank(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return 0;
    FieldMatrix m(f, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m.rank();
}

bool in_span(const Field& f, const std::vector<std::vector<Scalar>>& rows,
             const std::vector<Scalar>& v) {
    std::vector<std::vector<Scalar>> all = rows;
    all.push_back(v);
    return span_rank(f, all) == span_rank(f, rows);
}

}  // namespace abelcy
