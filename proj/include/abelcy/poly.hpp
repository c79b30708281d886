#ifndef ABELCY_POLY_HPP
#define ABELCY_POLY_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abelcy/coeffs.hpp"
#include "abelcy/ring.hpp"

namespace abelcy {

// Sparse multivariate polynomial.  Terms are kept strictly decreasing in the
// ring's active order with no zero coefficients; monomials and coefficients
// live in parallel arrays so the F_p paths stay compact.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)), c_(make_coeffs(ring_->field())) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Scalar& s);
    static Polynomial from_int(RingPtr ring, long long v);
    static Polynomial variable(RingPtr ring, int i);
    static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& s);
    static Polynomial from_terms(RingPtr ring, std::vector<std::pair<Monomial, Scalar>> terms);

    static Polynomial parse(const std::string& text, RingPtr ring);
    std::string format() const;

    const RingPtr& ring() const { return ring_; }
    size_t nterms() const { return m_.size(); }
    bool is_zero() const { return m_.empty(); }
    const std::vector<Monomial>& monomials() const { return m_; }
    const CoeffVec& coeffs() const { return c_; }
    const Monomial& monomial(size_t i) const { return m_[i]; }
    Scalar coeff(size_t i) const;
    Scalar coeff_of(const Monomial& m) const;  // zero if absent

    const Monomial& leading_monomial() const { return m_.front(); }
    Scalar leading_coeff() const { return coeff(0); }

    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    // degrees per block for a ring with bigrade_split > 0; nullopt if not bihomogeneous
    std::optional<std::pair<int, int>> bidegree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Scalar& s) const;
    Polynomial monic() const;
    Polynomial pow(int k) const;
    Polynomial mul_monomial(const Monomial& m, const Scalar& s) const;

    Polynomial partial(int var) const;
    Scalar evaluate(std::span<const Scalar> point) const;
    // substitution homomorphism x_i -> images[i] (images over the target ring)
    Polynomial compose(RingPtr target, std::span<const Polynomial> images) const;
    // x_i -> sum_j M[i][j] x_j; M given row-major, square of size nvars
    Polynomial linear_substitute(const std::vector<std::vector<Scalar>>& M) const;
    // variable injection into a larger ring: var i -> var image[i]
    Polynomial renamed(RingPtr target, std::span<const int> image) const;
    // re-sort the terms under another ring descriptor (same field/variables)
    Polynomial with_ring(RingPtr target) const;

    // exact division by a monomial; throws BadParameter unless every term is divisible
    Polynomial divided_by_monomial(const Monomial& m) const;
    bool divisible_by_monomial(const Monomial& m) const;

    // monomial-wise coefficient scaling (used by the tau action):
    // term c*x^e -> fn(e)*c*x^e
    Polynomial scale_terms(const std::function<Scalar(const Monomial&)>& fn) const;

    size_t hash() const;

private:
    RingPtr ring_;
    std::vector<Monomial> m_;
    CoeffVec c_;

    friend struct PolyAccess;
};

// Internal accessor for the typed kernels (Groebner engine, matrices).
struct PolyAccess {
    static std::vector<Monomial>& mono(Polynomial& p) { return p.m_; }
    static CoeffVec& coeff(Polynomial& p) { return p.c_; }
    static const std::vector<Monomial>& mono(const Polynomial& p) { return p.m_; }
    static const CoeffVec& coeff(const Polynomial& p) { return p.c_; }
    static Polynomial make(RingPtr r, std::vector<Monomial> m, CoeffVec c) {
        Polynomial p(std::move(r));
        p.m_ = std::move(m);
        p.c_ = std::move(c);
        return p;
    }
};

// The polar operator P_a(F) = (1/d) sum a_i dF/dx_i for homogeneous F of
// degree d >= 1; iterated k times via polar_iter.  When F lives in a ring
// with extra parameter variables, pass the form degree explicitly (degree 0
// means: use the total degree of F).
Polynomial polar(std::span<const Scalar> a, const Polynomial& F, int form_degree = 0);
Polynomial polar(std::span<const Polynomial> a, const Polynomial& F, int form_degree = 0);
Polynomial polar_iter(std::span<const Polynomial> a, const Polynomial& F, int k,
                      int form_degree = 0);

// All degree-d monomials in the ring's order (descending), optionally filtered.
std::vector<Monomial> graded_basis(const RingPtr& ring, int d,
                                   const std::function<bool(const Monomial&)>& keep = nullptr);

// Coordinates of p in the given monomial basis; throws MonomialNotInBasis.
std::vector<Scalar> coefficient_vector(const Polynomial& p, std::span<const Monomial> basis);

// Projective point with a canonical representative (first nonzero coord = 1).
class ProjectivePoint {
public:
    ProjectivePoint(RingPtr ring, std::vector<Scalar> coords);
    const RingPtr& ring() const { return ring_; }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& operator[](size_t i) const { return coords_[i]; }
    size_t size() const { return coords_.size(); }
    bool operator==(const ProjectivePoint& o) const;
    size_t hash() const;
    std::string format() const;

private:
    RingPtr ring_;
    std::vector<Scalar> coords_;  // canonicalized
};

struct ProjectivePointHash {
    size_t operator()(const ProjectivePoint& p) const { return p.hash(); }
};

}  // namespace abelcy

#endif
