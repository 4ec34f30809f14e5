#pragma once

/// Hurwitz numbers and weighted Hurwitz numbers, by independent routes.
///
/// The point of this module is cross-validation: the same quantity is
/// computed through unrelated pipelines (character sums, direct enumeration
/// of branch-profile tuples, monotone Cayley-graph paths, contingency-matrix
/// counts) and the library's tests insist the answers coincide exactly.
///
/// Classical Hurwitz numbers use the Frobenius character formula
///
///   H(mu^(1),...,mu^(k)) = sum_{|lambda|=n} hook_product(lambda)^{k-2}
///                          prod_i chi_lambda(mu^(i)) / z(mu^(i)),
///
/// and the weighted ones are the beta-coefficients of the content-product
/// deformation
///
///   sum_d H^d(mu,nu) b^d = sum_lambda r_lambda(0) chi_lambda(mu)
///                          chi_lambda(nu) / (z(mu) z(nu)),
///
/// with r_lambda(0) = prod over cells of G(b * content).

#include <functional>
#include <vector>

#include "hurwitz/characters.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/laurent.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permgroup.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/weights.hpp"

namespace hurwitz {

/// Classical Hurwitz number via the Frobenius character formula.
inline Rational hurwitz_character(const std::vector<Partition>& profiles) {
    if (profiles.empty())
        throw EmptyProfileList("hurwitz_character: no profiles given");
    const int n = weight(profiles[0]);
    for (const auto& mu : profiles)
        if (weight(mu) != n)
            throw WeightMismatch("hurwitz_character: profiles of unequal weight");
    const int k = static_cast<int>(profiles.size());
    Rational acc(0);
    for (const auto& lam : partitions_of(n)) {
        Rational t = pow_rational(Rational(hook_product(lam)), k - 2);
        for (const auto& mu : profiles) {
            Integer chi = character(lam, mu);
            if (chi == 0) {
                t = 0;
                break;
            }
            t *= Rational(chi) / Rational(z_order(mu));
        }
        acc += t;
    }
    return acc;
}

/// Full generating series sum_d H^d(mu,nu) b^d up to order D via the
/// character route.  Coefficients are polynomials in the formal G_k when the
/// weight function is symbolic, rational constants otherwise.
inline BetaSeries weighted_hurwitz_series(const WeightFunc& w, const Partition& mu,
                                          const Partition& nu, int D) {
    if (weight(mu) != weight(nu))
        throw WeightMismatch("weighted_hurwitz_series: |mu| != |nu|");
    const int n = weight(mu);
    BetaSeries acc(D);
    for (const auto& lam : partitions_of(n)) {
        Integer cm = character(lam, mu), cn = character(lam, nu);
        if (cm == 0 || cn == 0) continue;
        Rational c = Rational(cm * cn) / Rational(z_order(mu) * z_order(nu));
        acc += w.content_product(lam, 0, D) * c;
    }
    return acc;
}

/// H^d(mu,nu) via the character route.
inline LaurentPoly weighted_hurwitz_character(const WeightFunc& w, const Partition& mu,
                                              const Partition& nu, int d) {
    return weighted_hurwitz_series(w, mu, nu, d).coefficient(d);
}

/// H^d(mu,nu) via the defining sum: over all ordered tuples
/// (mu^(1),...,mu^(k)) of partitions of n, each != (1^n), with total
/// co-length d, add tuple_weight * H(mu^(1),...,mu^(k),mu,nu).  The k = 0
/// term (empty tuple, weight 1) is what makes d = 0 reduce to the classical
/// two-profile count.  Requires a parameter-form weight function.
inline Rational weighted_hurwitz_definition(const WeightFunc& w, const Partition& mu,
                                            const Partition& nu, int d) {
    if (weight(mu) != weight(nu))
        throw WeightMismatch("weighted_hurwitz_definition: |mu| != |nu|");
    if (!w.has_parameters())
        throw WeightMismatch(
            "weighted_hurwitz_definition: weight function has no parameter form");
    const int n = weight(mu);
    if (d == 0) return hurwitz_character({mu, nu});

    std::vector<Partition> nontrivial;
    for (const auto& p : partitions_of(n))
        if (colength(p) >= 1) nontrivial.push_back(p);

    Rational acc(0);
    std::vector<Partition> stack;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            std::vector<int> colens;
            for (const auto& p : stack) colens.push_back(colength(p));
            Rational wgt = w.tuple_weight(colens);
            if (wgt != 0) {
                std::vector<Partition> profiles = stack;
                profiles.push_back(mu);
                profiles.push_back(nu);
                acc += wgt * hurwitz_character(profiles);
            }
            return;
        }
        for (const auto& p : nontrivial) {
            if (colength(p) > remaining) continue;
            stack.push_back(p);
            rec(remaining - colength(p));
            stack.pop_back();
        }
    };
    rec(d);
    return acc;
}

/// H^d(mu,nu) via monotone Cayley-graph paths:
///   (1/n!) sum_{|lambda|=d} G_lambda * m^lambda_{mu,nu},
/// with G_lambda = prod G_{lambda_i}.  Integer path counts times coefficient
/// products, so this route also works with formal G_k.
inline LaurentPoly weighted_hurwitz_cayley(const WeightFunc& w, const Partition& mu,
                                           const Partition& nu, int d, int threads = 1) {
    if (weight(mu) != weight(nu))
        throw WeightMismatch("weighted_hurwitz_cayley: |mu| != |nu|");
    const int n = weight(mu);
    LaurentPoly acc;
    for (const auto& lam : partitions_of(d)) {
        LaurentPoly g = w.g_product(lam);
        if (g.is_zero()) continue;
        Integer paths = monotone_path_count(lam, mu, nu, threads);
        if (paths == 0) continue;
        acc += g * Rational(paths);
    }
    return acc / Rational(factorial(static_cast<unsigned>(n)));
}

// ---------------------------------------------------------------------------
// d = 0: contingency matrices

/// Number of non-negative integer matrices with the given row and column
/// sums (lists of equal total).
inline Integer contingency_count(const std::vector<int>& rows,
                                 const std::vector<int>& cols) {
    const std::size_t R = rows.size(), C = cols.size();
    Integer count(0);
    std::vector<int> colrem = cols;
    std::function<void(std::size_t)> fill_row = [&](std::size_t r) {
        if (r == R) {
            for (int c : colrem)
                if (c != 0) return;
            ++count;
            return;
        }
        // distribute rows[r] over the C columns bounded by colrem
        std::function<void(std::size_t, int)> fill = [&](std::size_t c, int rem) {
            if (c == C) {
                if (rem == 0) fill_row(r + 1);
                return;
            }
            int cap = std::min(rem, colrem[c]);
            for (int v = 0; v <= cap; ++v) {
                colrem[c] -= v;
                fill(c + 1, rem - v);
                colrem[c] += v;
            }
        };
        fill(0, rows[r]);
    };
    fill_row(0);
    return count;
}

/// One consistency entry of the d = 0 matrix representation: for exponent
/// classes a (nu-side) and b (mu-side), the number of n x n non-negative
/// integer matrices with column sums a and row sums b must equal the
/// coefficient of nu^{-a} mu^{-b} in sum_{omega,sigma} H^0(omega,sigma)
/// p_omega(1/nu) p_sigma(1/mu) = sum_omega [x^a]p_omega [x^b]p_omega / z.
struct D0Entry {
    Partition col_sums;  // a
    Partition row_sums;  // b
    Integer matrix_count;
    Rational coefficient;
    bool pass;
};

namespace detail {
/// Coefficient of x^{exps} (padded exponent vector) in p_omega over as many
/// variables as exps has entries.
inline Rational p_monomial_coefficient(const Partition& omega,
                                       const std::vector<int>& exps) {
    std::vector<VarId> vars;
    for (std::size_t i = 0; i < exps.size(); ++i)
        vars.push_back(var_mu(static_cast<int>(i) + 1));
    LaurentPoly p = power_sum_product(omega, vars);
    std::vector<std::pair<VarId, int>> mono;
    for (std::size_t i = 0; i < exps.size(); ++i) mono.emplace_back(vars[i], exps[i]);
    return p.coefficient(Monomial(std::move(mono)));
}
}  // namespace detail

/// Consistency check of one (a, b) class pair; a and b are partitions of the
/// same n, read as column/row sum vectors padded with zeros to length n.
inline D0Entry hurwitz_d0_matrix_count(const Partition& a, const Partition& b) {
    if (weight(a) != weight(b))
        throw WeightMismatch("hurwitz_d0_matrix_count: |a| != |b|");
    const int n = weight(a);
    std::vector<int> av(a.begin(), a.end()), bv(b.begin(), b.end());
    av.resize(static_cast<std::size_t>(n), 0);
    bv.resize(static_cast<std::size_t>(n), 0);

    Integer cnt = contingency_count(bv, av);
    Rational coeff(0);
    for (const auto& om : partitions_of(n)) {
        Rational ca = detail::p_monomial_coefficient(om, av);
        if (ca == 0) continue;
        Rational cb = detail::p_monomial_coefficient(om, bv);
        if (cb == 0) continue;
        coeff += ca * cb / Rational(z_order(om));
    }
    return {a, b, cnt, coeff, Rational(cnt) == coeff};
}

/// Full per-class report at level n.
inline std::vector<D0Entry> d0_matrix_report(int n) {
    std::vector<D0Entry> out;
    auto parts = partitions_of(n);
    for (const auto& a : parts)
        for (const auto& b : parts) out.push_back(hurwitz_d0_matrix_count(a, b));
    return out;
}

/// H^0 table recovered from contingency-matrix counts alone: invert the
/// monomial-class system C = M H M^T where M[a][omega] = [x^a] p_omega and
/// C[a][b] is the matrix count.  A character-free route to the d = 0 values.
inline Rational hurwitz_d0_from_matrices(const Partition& mu, const Partition& nu) {
    if (weight(mu) != weight(nu))
        throw WeightMismatch("hurwitz_d0_from_matrices: |mu| != |nu|");
    const int n = weight(mu);
    auto parts = partitions_of(n);
    const std::size_t P = parts.size();
    std::vector<std::vector<int>> classes;
    for (const auto& k : parts) {
        std::vector<int> v(k.begin(), k.end());
        v.resize(static_cast<std::size_t>(n), 0);
        classes.push_back(std::move(v));
    }
    Matrix<Rational> M(P, std::vector<Rational>(P));
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < P; ++j)
            M[i][j] = detail::p_monomial_coefficient(parts[j], classes[i]);
    Matrix<Rational> Minv = rational_inverse(M);

    std::size_t ia = 0, ib = 0;
    for (std::size_t i = 0; i < P; ++i) {
        if (parts[i] == mu) ia = i;
        if (parts[i] == nu) ib = i;
    }
    Rational acc(0);
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < P; ++j) {
            Rational c = Minv[ia][i] * Minv[ib][j];
            if (c == 0) continue;
            acc += c * Rational(contingency_count(classes[j], classes[i]));
        }
    return acc;
}

}  // namespace hurwitz
