#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abelcy/heisenberg.hpp"
#include "abelcy/pmatrix.hpp"

using namespace abelcy;

namespace {

PolyMatrix random_skew(const RingPtr& R, size_t n, std::mt19937_64& rng, int deg = 1) {
    PolyMatrix M(R, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            std::vector<std::pair<Monomial, Scalar>> terms;
            for (const auto& b : graded_basis(R, deg))
                terms.emplace_back(b, Scalar::rat(Rat((long long)(rng() % 7) - 3)));
            Polynomial e = Polynomial::from_terms(R, terms);
            M.at(i, j) = e;
            M.at(j, i) = -e;
        }
    return M;
}

}  // namespace

TEST_CASE("rref, rank, kernel") {
    Field F = Field::prime(default_experiment_prime());
    SUBCASE("identity has full rank and empty kernel") {
        auto I5 = FieldMatrix::identity(F, 5);
        CHECK(I5.rank() == 5);
        CHECK(I5.kernel().empty());
    }
    SUBCASE("rank-nullity on random matrices") {
        std::mt19937_64 rng(17);
        for (int it = 0; it < 30; ++it) {
            size_t r = 2 + rng() % 5, c = 2 + rng() % 5;
            FieldMatrix M(F, r, c);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j) M.at(i, j) = Scalar::fp(rng() % F.modulus());
            auto ker = M.kernel();
            CHECK(M.rank() + ker.size() == c);
            for (const auto& v : ker) {
                auto Mv = M.apply(v);
                for (const auto& s : Mv) CHECK(s.is_zero());
            }
        }
    }
    SUBCASE("det is multiplicative") {
        std::mt19937_64 rng(23);
        for (int it = 0; it < 20; ++it) {
            FieldMatrix A(F, 4, 4), B(F, 4, 4);
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 4; ++j) {
                    A.at(i, j) = Scalar::fp(rng() % F.modulus());
                    B.at(i, j) = Scalar::fp(rng() % F.modulus());
                }
            CHECK(A.mul(B).det() == F.mul(A.det(), B.det()));
        }
    }
}

TEST_CASE("symbolic determinants") {
    auto Q = Field::rationals();
    auto R = Ring::make(Q, 4);
    SUBCASE("1x1") {
        PolyMatrix M(R, 1, 1);
        M.at(0, 0) = Polynomial::parse("x0^2-x1*x2", R);
        CHECK(M.det() == Polynomial::parse("x0^2-x1*x2", R));
    }
    SUBCASE("2x2 is ad - bc") {
        PolyMatrix M(R, 2, 2);
        M.at(0, 0) = Polynomial::parse("x0", R);
        M.at(0, 1) = Polynomial::parse("x1", R);
        M.at(1, 0) = Polynomial::parse("x2", R);
        M.at(1, 1) = Polynomial::parse("x3", R);
        CHECK(M.det() == Polynomial::parse("x0*x3 - x1*x2", R));
    }
    SUBCASE("determinant specializes correctly") {
        std::mt19937_64 rng(31);
        Field Fp = Field::prime(101);
        auto Rp = Ring::make(Fp, 3);
        PolyMatrix M(Rp, 3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                std::vector<std::pair<Monomial, Scalar>> terms;
                for (const auto& b : graded_basis(Rp, 1))
                    terms.emplace_back(b, Scalar::fp(rng() % 101));
                M.at(i, j) = Polynomial::from_terms(Rp, terms);
            }
        std::vector<Scalar> P = {Scalar::fp(3), Scalar::fp(7), Scalar::fp(11)};
        CHECK(M.det().evaluate(P) == M.evaluate(P).det());
    }
}

TEST_CASE("pfaffians") {
    auto Q = Field::rationals();
    auto R = Ring::make(Q, 6);
    SUBCASE("2x2") {
        PolyMatrix M(R, 2, 2);
        M.at(0, 1) = Polynomial::variable(R, 0);
        M.at(1, 0) = -Polynomial::variable(R, 0);
        CHECK(M.pfaffian() == Polynomial::variable(R, 0));
    }
    SUBCASE("constant 4x4 cofactor oracle") {
        PolyMatrix M(R, 4, 4);
        int vals[6] = {1, 2, 3, 4, 5, 6};  // a01..a23
        int k = 0;
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j) {
                M.at(i, j) = Polynomial::from_int(R, vals[k]);
                M.at(j, i) = Polynomial::from_int(R, -vals[k]);
                ++k;
            }
        // pf = a01 a23 - a02 a13 + a03 a12 = 6 - 10 + 12 = 8
        CHECK(M.pfaffian() == Polynomial::from_int(R, 8));
    }
    SUBCASE("pf^2 = det for random skew matrices of sizes 2..6") {
        std::mt19937_64 rng(41);
        for (size_t n : {2u, 4u, 6u}) {
            for (int it = 0; it < 4; ++it) {
                auto M = random_skew(R, n, rng);
                Polynomial pf = M.pfaffian();
                CHECK(pf * pf == M.det());
            }
        }
    }
    SUBCASE("non-skew input is rejected") {
        PolyMatrix M(R, 2, 2);
        M.at(0, 1) = Polynomial::variable(R, 0);
        CHECK_THROWS_AS(M.pfaffian(), NotSkewSymmetric);
    }
}

TEST_CASE("pfaffian systems of odd skew matrices") {
    auto Q = Field::rationals();
    auto R = Ring::make(Q, 6);
    std::mt19937_64 rng(43);
    SUBCASE("M v = 0 identically for sizes 3, 5, 7") {
        for (size_t n : {3u, 5u, 7u}) {
            auto M = random_skew(R, n, rng);
            auto v = M.pfaffian_system();
            REQUIRE(v.size() == n);
            for (const auto& entry : M.apply(v)) CHECK(entry.is_zero());
        }
    }
    SUBCASE("even size is rejected") {
        auto M = random_skew(R, 4, rng);
        CHECK_THROWS_AS(M.pfaffian_system(), EvenSize);
    }
}

TEST_CASE("minors") {
    auto Q = Field::rationals();
    auto R = Ring::make(Q, 8);
    SUBCASE("k = size gives the determinant") {
        PolyMatrix M(R, 2, 2);
        M.at(0, 0) = Polynomial::variable(R, 0);
        M.at(1, 1) = Polynomial::variable(R, 1);
        auto ms = M.minors(2);
        REQUIRE(ms.size() == 1);
        CHECK(ms[0] == M.det());
    }
    SUBCASE("M_4(x,z) has 16 cubic 3x3 minors") {
        Field Fp = Field::prime(default_experiment_prime());
        auto Rp = Ring::make(Fp, 8);
        std::mt19937_64 rng(47);
        std::vector<Polynomial> zs;
        for (int i = 0; i < 8; ++i)
            zs.push_back(Polynomial::constant(Rp, Scalar::fp(rng() % Fp.modulus())));
        auto M = moore_even(4, coordinate_vector(Rp), zs);
        auto ms = M.minors(3);
        CHECK(ms.size() == 16);
        for (const auto& m : ms) CHECK((m.is_zero() || m.degree() == 3));
    }
    SUBCASE("minors specialize correctly") {
        Field Fp = Field::prime(101);
        auto Rp = Ring::make(Fp, 4);
        std::mt19937_64 rng(53);
        PolyMatrix M(Rp, 3, 4);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 4; ++j) {
                std::vector<std::pair<Monomial, Scalar>> terms;
                for (const auto& b : graded_basis(Rp, 1))
                    terms.emplace_back(b, Scalar::fp(rng() % 101));
                M.at(i, j) = Polynomial::from_terms(Rp, terms);
            }
        std::vector<Scalar> P = {Scalar::fp(2), Scalar::fp(3), Scalar::fp(5), Scalar::fp(7)};
        auto sym = M.minors(2);
        // numeric minors of the evaluated matrix, same enumeration order
        FieldMatrix Mev = M.evaluate(P);
        size_t idx = 0;
        for (const auto& rs : subsets_lex(3, 2))
            for (const auto& cs : subsets_lex(4, 2)) {
                Field F = Fp;
                Scalar num = F.sub(F.mul(Mev.at(rs[0], cs[0]), Mev.at(rs[1], cs[1])),
                                   F.mul(Mev.at(rs[0], cs[1]), Mev.at(rs[1], cs[0])));
                CHECK(sym[idx].evaluate(P) == num);
                ++idx;
            }
    }
}

TEST_CASE("jacobian") {
    auto Q = Field::rationals();
    auto R = Ring::make(Q, 2);
    std::vector<Polynomial> gens = {Polynomial::parse("x0^2", R)};
    auto J = jacobian(gens);
    REQUIRE(J.rows() == 1);
    REQUIRE(J.cols() == 2);
    CHECK(J.at(0, 0) == Polynomial::parse("2*x0", R));
    CHECK(J.at(0, 1).is_zero());
}
