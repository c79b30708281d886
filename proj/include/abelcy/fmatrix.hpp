#ifndef ABELCY_FMATRIX_HPP
#define ABELCY_FMATRIX_HPP

#include <vector>

#include "abelcy/field.hpp"

namespace abelcy {

// Dense matrix over a field, row-major.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(Field f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    static FieldMatrix identity(Field f, size_t n);

    FieldMatrix mul(const FieldMatrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    // in-place Gauss-Jordan; returns rank
    size_t rref();
    size_t rank() const;
    std::vector<std::vector<Scalar>> kernel() const;  // basis of right kernel
    Scalar det() const;                               // fraction-free for Q via rationals anyway

    // rank of the span of the rows (non-destructive)
    size_t row_rank() const { return rank(); }

private:
    Field field_ = Field::rationals();
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

// Row-space helpers for span computations on coefficient vectors.
size_t span_rank(const Field& f, const std::vector<std::vector<Scalar>>& rows);
// true iff v lies in the row span of rows
bool in_span(const Field& f, const std::vector<std::vector<Scalar>>& rows,
             const std::vector<Scalar>& v);

}  // namespace abelcy

#endif
