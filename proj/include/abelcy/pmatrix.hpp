#ifndef ABELCY_PMATRIX_HPP
#define ABELCY_PMATRIX_HPP

#include <span>
#include <vector>

#include "abelcy/fmatrix.hpp"
#include "abelcy/poly.hpp"

namespace abelcy {

// Rectangular matrix with polynomial entries over one ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, size_t rows, size_t cols);

    const RingPtr& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Polynomial& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Polynomial& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    bool is_symmetric() const;
    bool is_skew_symmetric() const;  // alternating: skew with zero diagonal

    PolyMatrix transposed() const;
    PolyMatrix submatrix(std::span<const size_t> rows, std::span<const size_t> cols) const;
    PolyMatrix plus(const PolyMatrix& o) const;
    PolyMatrix minus(const PolyMatrix& o) const;

    // matrix * vector of polynomials
    std::vector<Polynomial> apply(std::span<const Polynomial> v) const;

    // evaluate all entries at a point
    FieldMatrix evaluate(std::span<const Scalar> point) const;

    Polynomial det() const;       // cofactor expansion with memoized minors
    Polynomial pfaffian() const;  // even-size alternating matrices

    // all k x k minors, row subsets outer / column subsets inner, each lexicographic
    std::vector<Polynomial> minors(size_t k) const;
    // minors restricted to an explicit list of (row-set, col-set) pairs
    Polynomial minor(std::span<const size_t> rows, std::span<const size_t> cols) const;

    // the n sub-Pfaffians v_i = (-1)^i pf(delete row+col i) of an odd
    // alternating matrix; satisfies M v = 0 identically
    std::vector<Polynomial> pfaffian_system() const;

private:
    RingPtr ring_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> a_;
};

// (#gens) x nvars matrix of partial derivatives.
PolyMatrix jacobian(std::span<const Polynomial> gens);

// enumerate k-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<size_t>> subsets_lex(size_t n, size_t k);

}  // namespace abelcy

#endif
