#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abelcy/field.hpp"

using namespace abelcy;

TEST_CASE("primality and construction") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(31991));
    CHECK_FALSE(is_prime_u64(10082));  // 2 * 71^2
    CHECK_NOTHROW(Field::prime(2));
    CHECK_NOTHROW(Field::prime(31991));
    CHECK_THROWS_AS(Field::prime(10082), CompositeModulus);
    CHECK_THROWS_AS(Field::prime(1), CompositeModulus);
}

TEST_CASE("default experiment prime") {
    uint64_t p = default_experiment_prime();
    CHECK(p == 12601);
    CHECK(p > 10000);
    CHECK((p - 1) % 840 == 0);
    CHECK(is_prime_u64(p));
}

TEST_CASE("roots of unity") {
    Field F = Field::prime(13);
    SUBCASE("n = 1 is trivial") {
        CHECK(F.root_of_unity(1) == F.one());
    }
    SUBCASE("primitive fourth root in F_13") {
        Scalar z = F.root_of_unity(4);
        CHECK((z.u == 5 || z.u == 8));
        CHECK(F.pow(z, 2).u == 12);
        CHECK(F.pow(z, 4).u == 1);
    }
    SUBCASE("no fourth root in F_7") {
        Field F7 = Field::prime(7);
        CHECK_THROWS_AS(F7.root_of_unity(4), NoSuchRoot);
    }
    SUBCASE("deterministic choice") {
        Field Fp = Field::prime(default_experiment_prime());
        for (uint64_t n : {4, 5, 6, 7, 8, 10}) {
            Scalar z = Fp.root_of_unity(n);
            CHECK(Fp.pow(z, (long long)n) == Fp.one());
            for (uint64_t k = 1; k < n; ++k) CHECK(Fp.pow(z, (long long)k) != Fp.one());
        }
    }
    SUBCASE("over Q only orders 1 and 2") {
        Field Q = Field::rationals();
        CHECK(Q.root_of_unity(1).q == 1);
        CHECK(Q.root_of_unity(2).q == -1);
        CHECK_THROWS_AS(Q.root_of_unity(4), NoSuchRoot);
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(271828);
    Field Fp = Field::prime(default_experiment_prime());
    Field Q = Field::rationals();
    for (int iter = 0; iter < 300; ++iter) {
        Scalar a = Scalar::fp(rng() % Fp.modulus());
        Scalar b = Scalar::fp(rng() % Fp.modulus());
        Scalar c = Scalar::fp(rng() % Fp.modulus());
        CHECK(Fp.add(Fp.add(a, b), c) == Fp.add(a, Fp.add(b, c)));
        CHECK(Fp.mul(a, Fp.add(b, c)) == Fp.add(Fp.mul(a, b), Fp.mul(a, c)));
        if (!a.is_zero()) CHECK(Fp.mul(a, Fp.inv(a)) == Fp.one());

        auto rat = [&] {
            long long n = (long long)(rng() % 2000) - 1000;
            long long d = 1 + (long long)(rng() % 999);
            return Scalar::rat(Rat(n, d));
        };
        Scalar x = rat(), y = rat(), z = rat();
        CHECK(Q.add(Q.add(x, y), z) == Q.add(x, Q.add(y, z)));
        CHECK(Q.mul(x, Q.add(y, z)) == Q.add(Q.mul(x, y), Q.mul(x, z)));
        if (!x.is_zero()) CHECK(Q.mul(x, Q.inv(x)) == Q.one());
        // text round-trip is exact
        CHECK(Q.parse(Q.format(x)) == x);
    }
}

TEST_CASE("division by zero is rejected") {
    Field F = Field::prime(13);
    CHECK_THROWS_AS(F.inv(F.zero()), DivisionByZero);
    Field Q = Field::rationals();
    CHECK_THROWS_AS(Q.inv(Q.zero()), DivisionByZero);
}
