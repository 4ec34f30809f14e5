#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "hurwitz/matrix.hpp"
#include "hurwitz/series.hpp"

using namespace hurwitz;

TEST_CASE("determinants of small rational matrices", "[matrix]") {
    Matrix<Rational> m1{{Rational(5)}};
    CHECK(laplace_det(m1) == 5);

    Matrix<Rational> m2{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    CHECK(laplace_det(m2) == -2);

    Matrix<Rational> m3{{Rational(2), Rational(0), Rational(1)},
                        {Rational(1), Rational(3), Rational(2)},
                        {Rational(1), Rational(1), Rational(1)}};
    CHECK(laplace_det(m3) == 0);  // rows are linearly dependent

    Matrix<Rational> m4{{Rational(2), Rational(0), Rational(1)},
                        {Rational(1), Rational(3), Rational(2)},
                        {Rational(1), Rational(1), Rational(3)}};
    CHECK(laplace_det(m4) == 12);
}

TEST_CASE("determinant equals signed permutation sum", "[matrix][property]") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4;
        Matrix<Rational> m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        // signed sum over all permutations
        std::vector<int> perm{0, 1, 2, 3};
        Rational total(0);
        do {
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++inv;
            Rational prod(inv % 2 ? -1 : 1);
            for (int i = 0; i < n; ++i) prod *= m[i][perm[i]];
            total += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        REQUIRE(laplace_det(m) == total);
    }
}

TEST_CASE("determinant over polynomial and series rings", "[matrix]") {
    // det [[x, 1], [1, x]] = x^2 - 1
    LaurentPoly x = LaurentPoly::variable(var_mu(1), 1);
    Matrix<LaurentPoly> mp{{x, LaurentPoly(1)}, {LaurentPoly(1), x}};
    CHECK(laplace_det(mp) == x * x - LaurentPoly(1));

    BetaSeries one = BetaSeries::one(2);
    BetaSeries b(2);
    b.set_coefficient(1, LaurentPoly(1));
    Matrix<BetaSeries> ms{{one, b}, {b, one}};
    BetaSeries expect = one - b * b;
    CHECK(laplace_det(ms) == expect);
}

TEST_CASE("rational inverse round-trips", "[matrix]") {
    Matrix<Rational> m{{Rational(2), Rational(1)}, {Rational(7), Rational(4)}};
    Matrix<Rational> inv = rational_inverse(m);
    // m * inv = identity
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rational acc(0);
            for (int k = 0; k < 2; ++k)
                acc += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                       inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            CHECK(acc == (i == j ? 1 : 0));
        }

    Matrix<Rational> singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(rational_inverse(singular), Underdetermined);
}

TEST_CASE("vandermonde convention", "[matrix]") {
    // product over i<j of (x_j - x_i)
    CHECK(vandermonde_product({Rational(1), Rational(2)}) == 1);
    CHECK(vandermonde_product({Rational(1), Rational(2), Rational(3)}) == 2);
    CHECK(vandermonde_product({Rational(3), Rational(1)}) == -2);
    CHECK_THROWS_AS(vandermonde_product({Rational(1), Rational(1)}), RepeatedPoint);

    LaurentPoly a = LaurentPoly::variable(var_mu(1), 1);
    LaurentPoly b = LaurentPoly::variable(var_mu(2), 1);
    CHECK(vandermonde_poly({var_mu(1), var_mu(2)}) == b - a);
}
