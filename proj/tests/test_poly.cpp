#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abelcy/poly.hpp"

using namespace abelcy;

namespace {

Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int max_terms = 6,
                       int max_deg = 3) {
    std::vector<std::pair<Monomial, Scalar>> terms;
    int nt = 1 + (int)(rng() % (uint64_t)max_terms);
    for (int t = 0; t < nt; ++t) {
        Monomial m;
        int d = (int)(rng() % (uint64_t)(max_deg + 1));
        for (int k = 0; k < d; ++k) {
            int v = (int)(rng() % (uint64_t)R->nvars());
            m.e[(size_t)v]++;
            m.deg++;
        }
        Scalar c = R->field().is_prime_field()
                       ? Scalar::fp(rng() % R->field().modulus())
                       : Scalar::rat(Rat((long long)(rng() % 19) - 9, 1 + (long long)(rng() % 7)));
        terms.emplace_back(m, c);
    }
    return Polynomial::from_terms(R, std::move(terms));
}

}  // namespace

TEST_CASE("parse and format round-trip") {
    auto Q = Field::rationals();
    auto R = Ring::make(Q, 6);
    SUBCASE("the invariant cubic f0") {
        auto f0 = Polynomial::parse("x0^3+x2^3+x4^3", R);
        CHECK(f0.nterms() == 3);
        CHECK(f0.degree() == 3);
        CHECK(f0.is_homogeneous());
        CHECK(Polynomial::parse(f0.format(), R) == f0);
    }
    SUBCASE("zero") {
        auto z = Polynomial::parse("0", R);
        CHECK(z.is_zero());
        CHECK(z.format() == "0");
    }
    SUBCASE("the Klein quartic") {
        auto R3 = Ring::make(Q, 3, Order{}, {"x1", "x2", "x3"});
        auto f4 = Polynomial::parse("x1^3*x2 - x2^3*x3 - x3^3*x1", R3);
        CHECK(f4.nterms() == 3);
        CHECK(f4.degree() == 4);
        CHECK(Polynomial::parse(f4.format(), R3) == f4);
    }
    SUBCASE("syntax errors carry positions") {
        CHECK_THROWS_AS(Polynomial::parse("x0 + + x1", R), SyntaxError);
        CHECK_THROWS_AS(Polynomial::parse("x9^2", R), UnknownVariable);
    }
    SUBCASE("rational coefficients round-trip bit-exactly") {
        auto f = Polynomial::parse("22/7*x0^2 - 1/3*x1*x2 + 5", R);
        CHECK(Polynomial::parse(f.format(), R) == f);
    }
}

TEST_CASE("evaluation") {
    auto Q = Field::rationals();
    auto R3 = Ring::make(Q, 3, Order{}, {"x1", "x2", "x3"});
    auto f4 = Polynomial::parse("x1^3*x2 - x2^3*x3 - x3^3*x1", R3);
    SUBCASE("no pure x1^4 term") {
        std::vector<Scalar> P = {Q.one(), Q.zero(), Q.zero()};
        CHECK(f4.evaluate(P).is_zero());
    }
    SUBCASE("at (1:1:1)") {
        std::vector<Scalar> P = {Q.one(), Q.one(), Q.one()};
        CHECK(f4.evaluate(P) == Q.from_int(-1));
    }
    SUBCASE("the secant point of the hexagon") {
        auto R6 = Ring::make(Q, 6);
        auto f = Polynomial::parse("x0*x2*x4", R6);
        std::vector<Scalar> P = {Q.one(), Q.one(), Q.from_int(2), Q.one(), Q.zero(), Q.zero()};
        CHECK(f.evaluate(P).is_zero());
    }
    SUBCASE("arity is checked") {
        std::vector<Scalar> P = {Q.one(), Q.one()};
        CHECK_THROWS_AS(f4.evaluate(P), ArityMismatch);
    }
}

TEST_CASE("partial derivatives") {
    auto Q = Field::rationals();
    auto R = Ring::make(Q, 3, Order{}, {"x1", "x2", "x3"});
    auto f4 = Polynomial::parse("x1^3*x2 - x2^3*x3 - x3^3*x1", R);
    CHECK(Polynomial::parse("x1^2", R).partial(0) == Polynomial::parse("2*x1", R));
    CHECK(f4.partial(0) == Polynomial::parse("3*x1^2*x2 - x3^3", R));
    SUBCASE("Euler relation") {
        Polynomial acc(R);
        for (int i = 0; i < 3; ++i) acc = acc + Polynomial::variable(R, i) * f4.partial(i);
        CHECK(acc == f4.scaled(Q.from_int(4)));
    }
    SUBCASE("partials commute on random polynomials") {
        std::mt19937_64 rng(5);
        for (int it = 0; it < 50; ++it) {
            auto f = random_poly(R, rng);
            CHECK(f.partial(0).partial(2) == f.partial(2).partial(0));
        }
    }
}

TEST_CASE("ring axioms and evaluation homomorphism on random samples") {
    std::mt19937_64 rng(99);
    for (auto field : {Field::prime(default_experiment_prime()), Field::rationals()}) {
        auto R = Ring::make(field, 4);
        for (int it = 0; it < 60; ++it) {
            auto a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            std::vector<Scalar> P;
            for (int i = 0; i < 4; ++i)
                P.push_back(field.is_prime_field()
                                ? Scalar::fp(rng() % field.modulus())
                                : Scalar::rat(Rat((long long)(rng() % 13) - 6)));
            CHECK(field.mul(a.evaluate(P), b.evaluate(P)) == (a * b).evaluate(P));
        }
    }
}

TEST_CASE("linear substitution") {
    auto Q = Field::rationals();
    auto R = Ring::make(Q, 4);
    auto f = Polynomial::parse("x0^2*x1 - x2*x3^2 + x1^3", R);
    auto eye = [&] {
        std::vector<std::vector<Scalar>> M(4, std::vector<Scalar>(4, Q.zero()));
        for (int i = 0; i < 4; ++i) M[(size_t)i][(size_t)i] = Q.one();
        return M;
    };
    SUBCASE("identity") { CHECK(f.linear_substitute(eye()) == f); }
    SUBCASE("the (1,4) coordinate change round-trips") {
        // z0 = x0+x2, z1 = x0-x2, z2 = x3+x1, z3 = x3-x1
        std::vector<std::vector<Scalar>> M(4, std::vector<Scalar>(4, Q.zero()));
        M[0][0] = Q.one();
        M[0][2] = Q.one();
        M[1][0] = Q.one();
        M[1][2] = Q.from_int(-1);
        M[2][3] = Q.one();
        M[2][1] = Q.one();
        M[3][3] = Q.one();
        M[3][1] = Q.from_int(-1);
        std::vector<std::vector<Scalar>> Minv(4, std::vector<Scalar>(4, Q.zero()));
        Scalar h = Q.from_rat(Rat(1, 2)), mh = Q.neg(h);
        Minv[0][0] = h;
        Minv[0][1] = h;
        Minv[1][2] = h;
        Minv[1][3] = mh;
        Minv[2][0] = h;
        Minv[2][1] = mh;
        Minv[3][2] = h;
        Minv[3][3] = h;
        CHECK(f.linear_substitute(M).linear_substitute(Minv) == f);
    }
    SUBCASE("singular matrices are rejected") {
        auto M = eye();
        M[3] = M[2];
        CHECK_THROWS_AS(f.linear_substitute(M), SingularMatrix);
    }
    SUBCASE("functoriality on random substitutions") {
        std::mt19937_64 rng(11);
        auto Fp = Field::prime(101);
        auto Rp = Ring::make(Fp, 3);
        for (int it = 0; it < 20; ++it) {
            auto g = random_poly(Rp, rng);
            std::vector<std::vector<Scalar>> M1(3, std::vector<Scalar>(3)),
                M2(3, std::vector<Scalar>(3)), M21(3, std::vector<Scalar>(3, Fp.zero()));
            for (auto* M : {&M1, &M2})
                for (auto& row : *M)
                    for (auto& v : row) v = Scalar::fp(rng() % 101);
            // subst(M1) then subst(M2) equals subst(M2*M1)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    for (int k = 0; k < 3; ++k)
                        M21[(size_t)i][(size_t)j] =
                            Fp.add(M21[(size_t)i][(size_t)j],
                                   Fp.mul(M1[(size_t)i][(size_t)k], M2[(size_t)k][(size_t)j]));
            bool ok = true;
            try {
                ok = g.linear_substitute(M1).linear_substitute(M2) == g.linear_substitute(M21);
            } catch (const SingularMatrix&) {
                continue;
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("polar operator") {
    auto Q = Field::rationals();
    auto R = Ring::make(Q, 3);
    SUBCASE("polar of a linear form is its value") {
        auto l = Polynomial::parse("2*x0 - 3*x1 + x2", R);
        std::vector<Scalar> a = {Q.one(), Q.one(), Q.from_int(4)};
        Polynomial pa = polar(a, l);
        CHECK(pa == Polynomial::from_int(R, 3));  // l(1,1,4) = 2-3+4
    }
    SUBCASE("d P_a(F) = sum a_i dF/dx_i") {
        std::mt19937_64 rng(3);
        for (int it = 0; it < 30; ++it) {
            auto f = random_poly(R, rng, 5, 0);
            // make homogeneous of degree 3
            std::vector<std::pair<Monomial, Scalar>> terms;
            for (auto b : graded_basis(R, 3))
                terms.emplace_back(b, Scalar::rat(Rat((long long)(rng() % 9) - 4)));
            f = Polynomial::from_terms(R, terms);
            if (f.is_zero()) continue;
            std::vector<Scalar> a = {Q.from_int((int)(rng() % 7)), Q.from_int((int)(rng() % 7)),
                                     Q.from_int((int)(rng() % 7))};
            Polynomial lhs = polar(a, f).scaled(Q.from_int(3));
            Polynomial rhs(R);
            for (int i = 0; i < 3; ++i)
                rhs = rhs + f.partial(i).scaled(a[(size_t)i]);
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("characteristic dividing the degree is rejected") {
        auto F3 = Field::prime(3);
        auto R3 = Ring::make(F3, 2);
        auto f = Polynomial::parse("x0^3+x1^3", R3);
        std::vector<Scalar> a = {F3.one(), F3.one()};
        CHECK_THROWS_AS(polar(a, f), CharacteristicDividesDegree);
    }
}

TEST_CASE("graded basis and coefficient vectors") {
    auto Q = Field::rationals();
    CHECK(graded_basis(Ring::make(Q, 3), 1).size() == 3);
    CHECK(graded_basis(Ring::make(Q, 6), 3).size() == 56);
    CHECK(graded_basis(Ring::make(Q, 10), 2).size() == 55);
    auto R = Ring::make(Q, 8);
    auto basis = graded_basis(R, 2);
    SUBCASE("f2 = x2 x6 is a single basis vector") {
        auto f2 = Polynomial::parse("x2*x6", R);
        auto v = coefficient_vector(f2, basis);
        int nonzero = 0;
        for (const auto& c : v) nonzero += !c.is_zero();
        CHECK(nonzero == 1);
    }
    SUBCASE("linearity") {
        auto f0 = Polynomial::parse("x0^2+x4^2", R);
        auto f1 = Polynomial::parse("x1*x7+x3*x5", R);
        auto v0 = coefficient_vector(f0, basis);
        auto v1 = coefficient_vector(f1, basis);
        auto vs = coefficient_vector(f0 + f1, basis);
        for (size_t i = 0; i < basis.size(); ++i) CHECK(vs[i] == Q.add(v0[i], v1[i]));
    }
    SUBCASE("missing monomial throws") {
        auto f = Polynomial::parse("x0^3", R);
        CHECK_THROWS_AS(coefficient_vector(f, basis), MonomialNotInBasis);
    }
}

TEST_CASE("projective points canonicalize") {
    auto F = Field::prime(13);
    auto R = Ring::make(F, 3);
    ProjectivePoint P(R, {Scalar::fp(0), Scalar::fp(2), Scalar::fp(6)});
    ProjectivePoint Q2(R, {Scalar::fp(0), Scalar::fp(1), Scalar::fp(3)});
    CHECK(P == Q2);
    CHECK(P.hash() == Q2.hash());
    CHECK_THROWS_AS(ProjectivePoint(R, {F.zero(), F.zero(), F.zero()}), BadParameter);
}

TEST_CASE("bigraded queries") {
    auto Q = Field::rationals();
    auto R = Ring::make(Q, 6, Order{}, {"x1", "x2", "x3", "y1", "y2", "y3"}, 3);
    auto f = Polynomial::parse("x1^2*y1*y2 - x2*x3*y3^2", R);
    auto bd = f.bidegree();
    REQUIRE(bd.has_value());
    CHECK(bd->first == 2);
    CHECK(bd->second == 2);
    auto g = Polynomial::parse("x1^2*y1 - x2*y3^2", R);
    CHECK_FALSE(g.bidegree().has_value());
}
