#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "abelcy/heisenberg.hpp"
#include "abelcy/hilbert.hpp"
#include "abelcy/singular.hpp"
#include "abelcy/solve.hpp"

using namespace abelcy;

TEST_CASE("buchberger basics") {
    Field F = Field::prime(default_experiment_prime());
    auto R = Ring::make(F, 6);
    SUBCASE("principal ideals reduce to the monic generator") {
        auto f = Polynomial::parse("3*x0^2+5*x1*x2", R);
        auto G = buchberger(Ideal(R, {f}));
        REQUIRE(G.basis().size() == 1);
        CHECK(G.basis()[0] == f.monic());
    }
    SUBCASE("monomial ideals are already reduced") {
        auto a = Polynomial::parse("x0*x2*x4", R);
        auto b = Polynomial::parse("x1*x3*x5", R);
        auto G = buchberger(Ideal(R, {a, b}));
        CHECK(G.basis().size() == 2);
    }
    SUBCASE("generators are members") {
        auto g = Polynomial::parse("x0^2+x1*x2", R);
        auto h = Polynomial::parse("x0*x3+x4^2", R);
        auto G = buchberger(Ideal(R, {g, h}));
        CHECK(member(g, G));
        CHECK(member(h, G));
        CHECK(member(g * h, G));
        CHECK_FALSE(member(Polynomial::parse("x5^2", R), G));
    }
    SUBCASE("inhomogeneous generators are rejected by Ideal") {
        CHECK_THROWS_AS(Ideal(R, {Polynomial::parse("x0^2+x1", R)}), NotHomogeneous);
    }
    SUBCASE("pair budget raises ResourceBudgetExceeded") {
        std::mt19937_64 rng(83);
        std::vector<Polynomial> gens;
        for (int k = 0; k < 4; ++k) {
            std::vector<std::pair<Monomial, Scalar>> terms;
            for (const auto& m : graded_basis(R, 3))
                terms.emplace_back(m, Scalar::fp(rng() % F.modulus()));
            gens.push_back(Polynomial::from_terms(R, terms));
        }
        Budget tiny;
        tiny.max_pairs = 3;
        CHECK_THROWS_AS(buchberger(Ideal(R, gens), tiny), ResourceBudgetExceeded);
    }
}

TEST_CASE("normal form properties") {
    Field F = Field::prime(default_experiment_prime());
    auto R = Ring::make(F, 4);
    auto G = buchberger(Ideal(R, {Polynomial::parse("x0^2 - x1*x2", R),
                                  Polynomial::parse("x1^3 - x3^3", R)}));
    std::mt19937_64 rng(89);
    for (int it = 0; it < 40; ++it) {
        std::vector<std::pair<Monomial, Scalar>> terms;
        for (int t = 0; t < 5; ++t) {
            Monomial m;
            for (int k = 0; k < 4; ++k) {
                int v = (int)(rng() % 4);
                m.e[(size_t)v]++;
                m.deg++;
            }
            terms.emplace_back(m, Scalar::fp(rng() % F.modulus()));
        }
        auto f = Polynomial::from_terms(R, terms);
        auto g = Polynomial::from_terms(
            R, {{Monomial::var(0, 4), Scalar::fp(rng() % F.modulus())}});
        // idempotent and linear
        CHECK(normal_form(normal_form(f, G), G) == normal_form(f, G));
        CHECK(normal_form(f + g, G) == normal_form(f, G) + normal_form(g, G));
    }
}

TEST_CASE("spoly audit accepts computed bases") {
    Field F = Field::prime(default_experiment_prime());
    auto R = Ring::make(F, 5);
    std::mt19937_64 rng(97);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
        std::vector<std::pair<Monomial, Scalar>> terms;
        for (const auto& m : graded_basis(R, 2)) terms.emplace_back(m, Scalar::fp(rng() % F.modulus()));
        gens.push_back(Polynomial::from_terms(R, terms));
    }
    auto G = buchberger(Ideal(R, gens));
    CHECK(spoly_audit(G));
}

TEST_CASE("hilbert data") {
    Field F = Field::prime(default_experiment_prime());
    SUBCASE("zero ideal in P^n") {
        auto R = Ring::make(F, 5);
        auto G = buchberger(Ideal(R, {Polynomial::zero(R)}));
        auto H = hilbert(G);
        CHECK(H.dimension == 4);
        CHECK(H.degree == 1);
    }
    SUBCASE("Stanley-Reisner threefold of degree 9") {
        auto R = Ring::make(F, 6);
        auto G = buchberger(Ideal(R, {Polynomial::parse("x0*x2*x4", R),
                                      Polynomial::parse("x1*x3*x5", R)}));
        auto H = hilbert(G);
        CHECK(H.dimension == 3);
        CHECK(H.degree == 9);
    }
    SUBCASE("unit ideal is the empty scheme") {
        auto R = Ring::make(F, 3);
        auto G = buchberger(Ideal(R, {Polynomial::parse("x0", R), Polynomial::parse("x1", R),
                                      Polynomial::parse("x2", R)}));
        auto H = hilbert(G);
        CHECK(H.dimension == -1);
    }
    SUBCASE("series coefficients match the direct linear-algebra count") {
        auto R = Ring::make(F, 5);
        std::mt19937_64 rng(101);
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) {
            std::vector<std::pair<Monomial, Scalar>> terms;
            for (const auto& m : graded_basis(R, 2))
                terms.emplace_back(m, Scalar::fp(rng() % F.modulus()));
            gens.push_back(Polynomial::from_terms(R, terms));
        }
        Ideal I(R, gens);
        auto H = hilbert(buchberger(I));
        for (int t = 0; t <= 6; ++t)
            CHECK(hilbert_series_coefficient(H, 5, t) == hilbert_function_direct(I, t));
    }
}

TEST_CASE("euler characteristics of complete intersections") {
    CHECK(chi_smooth_ci({5}, 4) == -200);
    CHECK(chi_smooth_ci({3, 3}, 5) == -144);
    CHECK(chi_smooth_ci({2, 2, 2, 2}, 7) == -128);
    CHECK(chi_small_resolution(-144, 72) == 0);
    CHECK(chi_small_resolution(-98, 49) == 0);
    CHECK(chi_small_resolution(-296, 148) == 0);
    CHECK_THROWS_AS(chi_small_resolution(0, -1), BadParameter);
}

TEST_CASE("singular schemes") {
    Field F = Field::prime(default_experiment_prime());
    SUBCASE("smooth quadric has empty singular scheme") {
        auto R = Ring::make(F, 4);
        auto S = singular_scheme(Ideal(R, {Polynomial::parse("x0^2+x1^2+x2^2+x3^2", R)}), 1);
        CHECK(S.hilbert.dimension == -1);
        CHECK_FALSE(S.sampled);
    }
    SUBCASE("a cone is singular at its vertex") {
        auto R = Ring::make(F, 4);
        Ideal I(R, {Polynomial::parse("x0*x2-x1^2", R)});
        ProjectivePoint vertex(R, {F.zero(), F.zero(), F.zero(), F.one()});
        auto cert = singular_at(I, vertex, 1);
        CHECK(cert.singular);
        CHECK(cert.jacobian_rank == 0);
        // points off the variety are rejected
        ProjectivePoint off(R, {F.one(), F.one(), F.one(), F.one()});
        CHECK_THROWS_AS(singular_at(I, off, 1), PointNotOnVariety);
    }
    SUBCASE("degree and dimension ignore redundant generators") {
        auto R = Ring::make(F, 5);
        std::mt19937_64 rng(103);
        std::vector<Polynomial> ys;
        for (int i = 0; i < 5; ++i)
            ys.push_back(Polynomial::constant(R, Scalar::fp(1 + rng() % (F.modulus() - 1))));
        Polynomial q = moore_odd(5, coordinate_vector(R), ys).det();
        Ideal I(R, {q});
        auto S1 = singular_scheme(I, 1);
        // add a redundant generator (a multiple of q)
        Ideal I2(R, {q, q * Polynomial::variable(R, 0)});
        PolyMatrix J = jacobian(I.gens());
        auto S2gens = I2.gens();
        for (const auto& m : jacobian(I.gens()).minors(1)) S2gens.push_back(m);
        auto H2 = hilbert(buchberger(Ideal(R, S2gens)));
        CHECK(S1.hilbert.dimension == H2.dimension);
        CHECK(S1.hilbert.degree == H2.degree);
    }
    SUBCASE("budget exceeded without sampling") {
        auto R = Ring::make(F, 7);
        std::mt19937_64 rng(107);
        EigenspaceEmbedding m7{7, -1};
        auto yv = m7.embed(F, {Scalar::fp(2), Scalar::fp(3), Scalar::fp(5)});
        std::vector<Polynomial> ys;
        for (const auto& s : yv) ys.push_back(Polynomial::constant(R, s));
        auto M = moore_odd(7, coordinate_vector(R), ys);
        Ideal I(R, M.pfaffian_system());
        SingularOptions so;
        so.max_minors = 400;  // the case needs 1225
        CHECK_THROWS_AS(singular_scheme(I, 3, so), ResourceBudgetExceeded);
    }
}

TEST_CASE("zero dimensional solving") {
    Field F13 = Field::prime(13);
    SUBCASE("(x1, x2) in P^2") {
        auto R = Ring::make(F13, 3);
        auto pts = zero_dim_solve(Ideal(R, {Polynomial::variable(R, 1),
                                            Polynomial::variable(R, 2)}));
        REQUIRE(pts.size() == 1);
        CHECK(pts[0] == ProjectivePoint(R, {F13.one(), F13.zero(), F13.zero()}));
    }
    SUBCASE("(x1 - x2, x0^2 - x1 x2) over F_13") {
        auto R = Ring::make(F13, 3);
        auto pts = zero_dim_solve(Ideal(R, {Polynomial::parse("x1-x2", R),
                                            Polynomial::parse("x0^2-x1*x2", R)}));
        REQUIRE(pts.size() == 2);
        ProjectivePoint a(R, {F13.one(), F13.one(), F13.one()});
        ProjectivePoint b(R, {F13.from_int(12), F13.one(), F13.one()});
        CHECK((pts[0] == a || pts[1] == a));
        CHECK((pts[0] == b || pts[1] == b));
        // every returned point satisfies the generators exactly
        for (const auto& P : pts) {
            CHECK(Polynomial::parse("x1-x2", R)
                      .evaluate(std::span<const Scalar>(P.coords()))
                      .is_zero());
        }
    }
    SUBCASE("positive-dimensional input is rejected") {
        auto R = Ring::make(F13, 3);
        CHECK_THROWS_AS(zero_dim_solve(Ideal(R, {Polynomial::variable(R, 0)})),
                        NotZeroDimensional);
    }
}

TEST_CASE("univariate roots") {
    uint64_t p = default_experiment_prime();
    SUBCASE("linear") {
        auto r = univariate_roots({p - 5, 1}, p);  // x - 5
        REQUIRE(r.size() == 1);
        CHECK(r[0] == 5);
    }
    SUBCASE("random split polynomials recover their roots") {
        std::mt19937_64 rng(109);
        for (int it = 0; it < 20; ++it) {
            std::vector<uint64_t> roots;
            for (int k = 0; k < 4; ++k) roots.push_back(rng() % p);
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            // f = prod (x - r)
            std::vector<uint64_t> f{1};
            for (uint64_t r : roots) {
                std::vector<uint64_t> g(f.size() + 1, 0);
                for (size_t i = 0; i < f.size(); ++i) {
                    g[i + 1] = (g[i + 1] + f[i]) % p;
                    g[i] = (g[i] + mulmod_u64(f[i], p - r, p)) % p;
                }
                f = std::move(g);
            }
            auto found = univariate_roots(f, p, 1 + (uint64_t)it);
            CHECK(found == roots);
        }
    }
    SUBCASE("irreducible quadratic has no roots") {
        // x^2 - g with g a non-residue
        Field F = Field::prime(p);
        uint64_t g = F.primitive_root();
        auto r = univariate_roots({p - g, 0, 1}, p);
        CHECK(r.empty());
    }
}

TEST_CASE("cache round-trip with audit") {
    Field F = Field::prime(default_experiment_prime());
    auto R = Ring::make(F, 4);
    auto dir = std::filesystem::temp_directory_path() / "abelcy_cache_test";
    std::filesystem::remove_all(dir);
    GBCache cache(dir.string());
    Ideal I(R, {Polynomial::parse("x0^2-x1*x3", R), Polynomial::parse("x1*x2-x0*x3", R)});
    auto G = buchberger_cached(I, Budget{}, &cache);
    CHECK(cache.list().size() == 1);
    auto hit = cache.load(R, I.gens());
    REQUIRE(hit.has_value());
    CHECK(hit->basis().size() == G.basis().size());
    for (size_t i = 0; i < G.basis().size(); ++i) CHECK(hit->basis()[i] == G.basis()[i]);
    cache.clear();
    CHECK(cache.list().empty());
    std::filesystem::remove_all(dir);
}
