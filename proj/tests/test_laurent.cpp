#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hurwitz/laurent.hpp"

using namespace hurwitz;

namespace {

// deterministic random polynomials over a small variable pool
LaurentPoly random_poly(std::mt19937_64& rng, bool allow_negative_exponents = true) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> var_pick(0, 3);
    std::uniform_int_distribution<int> expo(allow_negative_exponents ? -3 : 0, 3);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    const VarId pool[] = {var_mu(1), var_nu(1), var_beta(), var_g(2)};
    LaurentPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<std::pair<VarId, int>> factors;
        int nv = var_pick(rng);
        for (int v = 0; v < nv; ++v) {
            int e = expo(rng);
            if (e != 0) factors.emplace_back(pool[var_pick(rng)], e);
        }
        p += LaurentPoly::monomial(Monomial(std::move(factors)),
                                   Rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("monomial ordering and arithmetic", "[laurent]") {
    Monomial a({{var_mu(1), 2}});
    Monomial b({{var_mu(1), 1}, {var_mu(2), 1}});
    CHECK(b < a);  // lex: higher power of the earlier variable wins
    CHECK((a * b).exponent_of(var_mu(1)) == 3);
    CHECK(a.inverse().exponent_of(var_mu(1)) == -2);
    CHECK(a.pow(3).exponent_of(var_mu(1)) == 6);
    CHECK((a / b).exponent_of(var_mu(2)) == -1);
}

TEST_CASE("ring axioms hold on random elements", "[laurent][property]") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 1100; ++trial) {
        LaurentPoly a = random_poly(rng);
        LaurentPoly b = random_poly(rng);
        LaurentPoly c = random_poly(rng);
        // commutativity, associativity, distributivity, identities, inverses
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + LaurentPoly() == a);
        REQUIRE(a * LaurentPoly(1) == a);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * LaurentPoly() == LaurentPoly());
    }
}

TEST_CASE("single-term inverses", "[laurent]") {
    LaurentPoly m = LaurentPoly::monomial(Monomial({{var_mu(1), 2}, {var_nu(1), -1}}),
                                          Rational(3, 4));
    CHECK(m * m.pow(-1) == LaurentPoly(1));
    LaurentPoly two_terms = LaurentPoly::variable(var_mu(1), 1) + LaurentPoly(1);
    CHECK_THROWS_AS(two_terms.pow(-1), Error);
}

TEST_CASE("substitution and evaluation", "[laurent]") {
    // p = mu1^2 nu1 - 2 mu1
    LaurentPoly p = LaurentPoly::monomial(Monomial({{var_mu(1), 2}, {var_nu(1), 1}}), 1) -
                    LaurentPoly::variable(var_mu(1), 1) * Rational(2);
    LaurentPoly q = p.substituted(var_mu(1), Rational(3));
    CHECK(q == LaurentPoly::variable(var_nu(1), 1) * Rational(9) - LaurentPoly(6));
    CHECK(p.evaluated({{var_mu(1), Rational(3)}, {var_nu(1), Rational(1, 3)}}) ==
          Rational(-3));
}

TEST_CASE("coefficient extraction", "[laurent]") {
    LaurentPoly p = LaurentPoly::variable(var_beta(), 2) * Rational(5) +
                    LaurentPoly::variable(var_beta(), 1) *
                        LaurentPoly::variable(var_mu(1), 1) -
                    LaurentPoly(7);
    CHECK(p.coefficient_of(var_beta(), 2) == LaurentPoly(5));
    CHECK(p.coefficient_of(var_beta(), 1) == LaurentPoly::variable(var_mu(1), 1));
    CHECK(p.coefficient_of(var_beta(), 0) == LaurentPoly(-7));
    CHECK(p.coefficient_of(var_beta(), 3).is_zero());
    CHECK(p.min_degree(var_beta()) == 0);
    CHECK(p.max_degree(var_beta()) == 2);
}

TEST_CASE("exact division round-trips products", "[laurent][property]") {
    std::mt19937_64 rng(777);
    int done = 0;
    while (done < 200) {
        LaurentPoly f = random_poly(rng);
        LaurentPoly g = random_poly(rng);
        if (g.is_zero()) continue;
        REQUIRE(exact_div(f * g, g) == f);
        ++done;
    }
}

TEST_CASE("non-divisible pairs throw", "[laurent]") {
    LaurentPoly f = LaurentPoly::variable(var_mu(1), 2) - LaurentPoly(1);
    LaurentPoly g = LaurentPoly::variable(var_mu(1), 1) - LaurentPoly(2);
    CHECK_THROWS_AS(exact_div(f, g), NotDivisible);
    // but the factored pair divides
    LaurentPoly h = LaurentPoly::variable(var_mu(1), 1) - LaurentPoly(1);
    CHECK(exact_div(f, h) == LaurentPoly::variable(var_mu(1), 1) + LaurentPoly(1));
}

TEST_CASE("division by zero throws", "[laurent]") {
    CHECK_THROWS_AS(exact_div(LaurentPoly(1), LaurentPoly()), Error);
}

TEST_CASE("term budget guard", "[laurent]") {
    std::size_t old = max_terms();
    set_max_terms(10);
    LaurentPoly p;
    CHECK_THROWS_AS(
        [&] {
            for (int i = 0; i < 100; ++i)
                p += LaurentPoly::variable(var_mu(1), i);
        }(),
        TooLarge);
    set_max_terms(old);
}

TEST_CASE("string form is stable", "[laurent]") {
    LaurentPoly p = LaurentPoly::variable(var_mu(1), 2) * Rational(1, 3) +
                    LaurentPoly::variable(var_nu(2), -1) - LaurentPoly(4);
    // descending lex: the mu1^2 term leads, the constant sorts above the
    // negative-exponent term
    CHECK(p.str() == "1/3*mu1^2 - 4 + nu2^-1");
    CHECK(LaurentPoly().str() == "0");
}
