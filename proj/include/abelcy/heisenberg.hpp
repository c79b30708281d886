#ifndef ABELCY_HEISENBERG_HPP
#define ABELCY_HEISENBERG_HPP

#include <span>
#include <string>
#include <vector>

#include "abelcy/pmatrix.hpp"
#include "abelcy/poly.hpp"

namespace abelcy {

// Word in the Schrodinger generators, normalized to sigma^a tau^b iota^c
// times a central power xi^e; normalization uses tau sigma = xi sigma tau.
struct GroupElement {
    int d = 1;  // level
    int a = 0, b = 0, c = 0, e = 0;

    static GroupElement sigma(int d, int k = 1) { return normalized(d, k, 0, 0, 0); }
    static GroupElement tau(int d, int k = 1) { return normalized(d, 0, k, 0, 0); }
    static GroupElement iota(int d) { return normalized(d, 0, 0, 1, 0); }
    static GroupElement identity(int d) { return normalized(d, 0, 0, 0, 0); }
    static GroupElement normalized(int d, int a, int b, int c, int e);

    // composition: (g * h)(f) = g(h(f))
    GroupElement operator*(const GroupElement& o) const;
    bool operator==(const GroupElement& o) const = default;
    std::string format() const;
};

// The Schrodinger action of H_d (plus the involution iota) on the variable
// block [offset, offset+d) of a ring.  sigma(x_i) = x_{i-1}, tau(x_i) =
// xi^{-i} x_i, iota(x_i) = x_{-i}, indices mod d within the block.
class HeisenbergAction {
public:
    HeisenbergAction(RingPtr ring, int d, int offset = 0);

    int level() const { return d_; }
    int offset() const { return offset_; }
    const RingPtr& ring() const { return ring_; }

    // xi^k, lazily resolved; over Q only even multiples of d/2 exist
    Scalar xi_pow(long long k) const;

    Polynomial act(const GroupElement& g, const Polynomial& f) const;
    ProjectivePoint act(const GroupElement& g, const ProjectivePoint& P) const;

    Polynomial sigma(const Polynomial& f, int k = 1) const {
        return act(GroupElement::sigma(d_, k), f);
    }
    Polynomial tau(const Polynomial& f, int k = 1) const { return act(GroupElement::tau(d_, k), f); }
    Polynomial iota(const Polynomial& f) const { return act(GroupElement::iota(d_), f); }

    // breadth-first closure of P under the generators, projectively deduplicated
    std::vector<ProjectivePoint> orbit(const ProjectivePoint& P,
                                       std::span<const GroupElement> generators,
                                       size_t max_size = 4096) const;

    // basis of the degree-k part fixed by every generator, via the kernel of
    // stacked (g - id) coefficient matrices
    std::vector<Polynomial> fixed_subspace(int degree, std::span<const GroupElement> generators) const;

private:
    RingPtr ring_;
    int d_;
    int offset_;
    mutable std::vector<Scalar> xi_table_;  // resolved powers for prime fields

    int var(int i) const { return offset_ + ((i % d_) + d_) % d_; }
};

// --- Moore-type matrices and the named invariant bases -------------------

// M_d(x,y) = (x_{i+j} y_{i-j} + x_{i+j+d} y_{i-j+d}), indices mod 2d.
PolyMatrix moore_even(int d, std::span<const Polynomial> xs, std::span<const Polynomial> ys);
// M'_n(x,y) = (x_{h(i+j)} y_{h(i-j)}) with h = (n+1)/2, indices mod n (n odd).
PolyMatrix moore_odd(int n, std::span<const Polynomial> xs, std::span<const Polynomial> ys);
// L(z,y) = (z_{2i-j} y_{i-j}), indices mod 5.
PolyMatrix l_matrix(std::span<const Polynomial> zs, std::span<const Polynomial> ys);

// The symmetric 4x4 matrix N of the (1,4) octic family f(z;lambda) = lambda N t(lambda);
// zs are the four coordinates.
PolyMatrix blvs_matrix(std::span<const Polynomial> zs);

struct HessianBlocks {
    PolyMatrix R;  // 8x8 block diag(A, B)
    PolyMatrix A, B;
    PolyMatrix A1, A2, B1, B2;  // 2x2 blocks
};
// zs: four coordinates; ws: four entries with w3 = w1 enforced.
HessianBlocks hessian_blocks(std::span<const Polynomial> zs, std::span<const Polynomial> ws);

// coordinate functions x_0..x_{n-1} of a ring as polynomials
std::vector<Polynomial> coordinate_vector(const RingPtr& ring, int offset = 0, int count = -1);

// named invariant bases of the paper; case tags: 1_6, 1_8, 1_10, klein
struct NamedBasis {
    std::vector<std::string> names;
    std::vector<Polynomial> polys;
};
NamedBasis invariant_basis(const std::string& case_tag, const RingPtr& ring);

// the 11 sigma-orbit blocks of quadrics at level 10, grouped V1,V2,V3,V4
std::vector<std::vector<std::vector<Polynomial>>> quadric_type_blocks_level10(const RingPtr& ring);

// --- eigenspace embeddings ------------------------------------------------

struct EigenspaceEmbedding {
    int d = 1;
    int sign = +1;  // +1 or -1 eigenspace of iota

    int dim() const;  // projective dimension of the eigenspace
    // number of input coordinates = dim()+1
    std::vector<Scalar> embed(const Field& F, std::span<const Scalar> coords) const;
    std::vector<Polynomial> embed_polys(const RingPtr& target,
                                        std::span<const Polynomial> coords) const;
    ProjectivePoint embed_point(const RingPtr& target, std::span<const Scalar> coords) const;
};

}  // namespace abelcy

#endif
