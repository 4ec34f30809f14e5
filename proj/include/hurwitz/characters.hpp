#pragma once

/// Irreducible characters of symmetric groups and Schur polynomials.
///
/// Character values chi_lambda(mu) are computed by the Murnaghan-Nakayama
/// rule in its beta-set (first-column hook length) form: removing a border
/// strip of size r from lambda corresponds to subtracting r from one
/// beta-number such that the result is a fresh nonnegative beta-number, and
/// the strip height is the number of beta-numbers jumped over.  This phrasing
/// avoids explicit border-strip surgery on the diagram and is easy to get
/// right.
///
/// Schur polynomials come in two independent flavors on purpose: the
/// character expansion s_lambda = sum_mu chi_lambda(mu)/z_mu p_mu, and the
/// bialternant ratio det(x_i^{lambda_j+N-j}) / det(x_i^{N-j}).  Tests play
/// them against each other.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/laurent.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// chi_lambda(mu): irreducible character of S_n at class mu, |lambda| =
/// |mu| = n.  Exact integer; memoized per thread.
inline Integer character(const Partition& lambda, const Partition& mu) {
    if (weight(lambda) != weight(mu))
        throw WeightMismatch("character: |lambda| != |mu|");

    thread_local std::map<std::pair<Partition, Partition>, Integer> memo;

    std::function<Integer(const Partition&, const Partition&)> rec =
        [&](const Partition& lam, const Partition& rest) -> Integer {
        if (lam.empty()) return 1;  // chi_empty(empty) = 1; weights match by induction
        auto key = std::make_pair(lam, rest);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        const int r = rest[0];
        Partition tail(rest.begin() + 1, rest.end());
        const int L = length(lam);
        std::vector<int> beta(L);
        for (int i = 0; i < L; ++i) beta[i] = lam[i] + (L - 1 - i);
        std::sort(beta.begin(), beta.end());

        Integer total(0);
        for (int i = 0; i < L; ++i) {
            const int b = beta[i];
            const int b2 = b - r;
            if (b2 < 0) continue;
            if (std::binary_search(beta.begin(), beta.end(), b2)) continue;
            int height = 0;
            for (int x : beta)
                if (b2 < x && x < b) ++height;
            std::vector<int> nb = beta;
            nb[i] = b2;
            std::sort(nb.begin(), nb.end());
            Partition nl;
            for (int j = L - 1; j >= 0; --j) {
                int part = nb[j] - j;
                if (part > 0) nl.push_back(part);
            }
            Integer piece = rec(nl, tail);
            if (height % 2)
                total -= piece;
            else
                total += piece;
        }
        return memo.emplace(std::move(key), std::move(total)).first->second;
    };
    return rec(lambda, mu);
}

/// dim(lambda) = chi_lambda(1^n) = n! / (product of hooks).
inline Integer dimension(const Partition& lambda) {
    return factorial(static_cast<unsigned>(weight(lambda))) / hook_product(lambda);
}

/// Power sum p_k over explicit variables.
inline LaurentPoly power_sum(int k, const std::vector<VarId>& vars) {
    LaurentPoly p;
    for (VarId v : vars) p += LaurentPoly::variable(v, k);
    return p;
}

/// Product p_omega = p_{omega_1} p_{omega_2} ... over explicit variables.
inline LaurentPoly power_sum_product(const Partition& omega, const std::vector<VarId>& vars) {
    LaurentPoly p(1);
    for (int k : omega) p *= power_sum(k, vars);
    return p;
}

/// p_omega evaluated at rational points.
inline Rational power_sum_product_at(const Partition& omega, const std::vector<Rational>& x) {
    Rational p(1);
    for (int k : omega) {
        Rational s(0);
        for (const Rational& xi : x) s += pow_rational(xi, k);
        p *= s;
    }
    return p;
}

/// Schur polynomial via the character expansion.
inline LaurentPoly schur_poly(const Partition& lambda, const std::vector<VarId>& vars) {
    LaurentPoly s;
    for (const auto& mu : partitions_of(weight(lambda))) {
        Integer chi = character(lambda, mu);
        if (chi == 0) continue;
        s += power_sum_product(mu, vars) * (Rational(chi) / Rational(z_order(mu)));
    }
    return s;
}

/// Schur value via the character expansion (any points, repeats fine).
inline Rational schur_at_via_characters(const Partition& lambda,
                                        const std::vector<Rational>& x) {
    Rational s(0);
    for (const auto& mu : partitions_of(weight(lambda))) {
        Integer chi = character(lambda, mu);
        if (chi == 0) continue;
        s += power_sum_product_at(mu, x) * Rational(chi) / Rational(z_order(mu));
    }
    return s;
}

/// Schur value via the bialternant ratio at pairwise-distinct points:
/// det(x_i^{lambda_j+N-j}) / det(x_i^{N-j}).  Both determinants use the
/// same (decreasing-power) column order, so the ratio needs no sign fix.
/// A partition with more parts than points evaluates to zero (a Schur
/// polynomial needs at least length(lambda) variables); throws RepeatedPoint
/// on duplicate points.
inline Rational schur_at_bialternant(const Partition& lambda,
                                     const std::vector<Rational>& x) {
    const int N = static_cast<int>(x.size());
    if (length(lambda) > N) return Rational(0);
    Matrix<Rational> num(static_cast<std::size_t>(N),
                         std::vector<Rational>(static_cast<std::size_t>(N)));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int lamj = j < length(lambda) ? lambda[j] : 0;
            num[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                pow_rational(x[static_cast<std::size_t>(i)], lamj + N - 1 - j);
        }
    // det(x_i^{N-1-j}) = prod_{i<j} (x_i - x_j)
    Rational denom(1);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            if (x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)])
                throw RepeatedPoint("schur_at_bialternant: repeated point " +
                                    x[static_cast<std::size_t>(i)].get_str());
            denom *= x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
        }
    return laplace_det(num) / denom;
}

/// Schur polynomial via the bialternant with exact polynomial division.
/// Exercises the polynomial determinant and exact-division machinery; the
/// character route above is the fast path.
inline LaurentPoly schur_poly_bialternant(const Partition& lambda,
                                          const std::vector<VarId>& vars) {
    const int N = static_cast<int>(vars.size());
    if (length(lambda) > N)
        throw Error("schur_poly_bialternant: partition longer than variable list");
    Matrix<LaurentPoly> num(static_cast<std::size_t>(N),
                            std::vector<LaurentPoly>(static_cast<std::size_t>(N)));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int lamj = j < length(lambda) ? lambda[j] : 0;
            num[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                LaurentPoly::variable(vars[static_cast<std::size_t>(i)], lamj + N - 1 - j);
        }
    LaurentPoly denom(1);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            denom *= LaurentPoly::variable(vars[static_cast<std::size_t>(i)]) -
                     LaurentPoly::variable(vars[static_cast<std::size_t>(j)]);
    return exact_div(laplace_det(num), denom);
}

/// Power sums over polynomial points (e.g. inverse Miwa monomials); each
/// point must be invertible when k < 0, which holds for single-term points.
inline LaurentPoly power_sum_product(const Partition& omega,
                                     const std::vector<LaurentPoly>& points) {
    LaurentPoly p(1);
    for (int k : omega) {
        LaurentPoly s;
        for (const LaurentPoly& x : points) s += x.pow(k);
        p *= s;
    }
    return p;
}

/// Full character table of S_n: values[{lambda, mu}] = chi_lambda(mu).
struct CharacterTable {
    int n;
    std::map<std::pair<Partition, Partition>, Integer> values;

    const Integer& value(const Partition& lambda, const Partition& mu) const {
        return values.at({lambda, mu});
    }
};

inline CharacterTable character_table(int n) {
    CharacterTable t;
    t.n = n;
    auto parts = partitions_of(n);
    for (const auto& lam : parts)
        for (const auto& mu : parts) t.values[{lam, mu}] = character(lam, mu);
    return t;
}

}  // namespace hurwitz
