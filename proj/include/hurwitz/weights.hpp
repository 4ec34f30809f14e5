#pragma once

/// Weight generating functions G(z) = 1 + G_1 z + G_2 z^2 + ...
///
/// A WeightFunc carries the coefficient data of G in one of two shapes:
///
///  * parameter form: G(z) = prod_i (1 + c_i z) for an explicit finite list
///    of rational parameters c_1..c_M, so G_k is the elementary symmetric
///    polynomial e_k(c) and vanishes for k > M;
///  * coefficient form: the G_k are given directly up to a truncation
///    order, each either a rational constant or a formal variable g_k, so
///    whole computations can be carried out symbolically in the G_k.
///
/// From G the ladder of content products is built: r_k = G(k b) as a series
/// in the deformation variable b, the cumulative products rho_j, and the
/// normalization r0 used by the determinantal representations.  The sign
/// conventions are fixed so that rho_0 = rho_{-1} = 1:
///
///   rho_j    = G(b) G(2b) ... G(jb)            for j > 0,
///   rho_{-j} = 1 / (G(-b) G(-2b) ... G(-(j-1)b)) for j > 0,
///
/// and r0_of(-N) = prod_{k=1}^{N-1} G(-k b)^{N-k}, a polynomial, equal to
/// 1/(rho_{-1} ... rho_{-N}).

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/laurent.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

class WeightFunc {
  public:
    /// G(z) = prod_i (1 + c_i z); all G_k available, zero beyond the number
    /// of parameters.
    static WeightFunc from_parameters(std::vector<Rational> c) {
        WeightFunc w;
        w.c_ = std::move(c);
        w.has_c_ = true;
        return w;
    }

    /// Explicit coefficients G_0..G_D (constants or formal variables);
    /// G_0 must equal 1.
    static WeightFunc from_coefficients(std::vector<LaurentPoly> g) {
        if (g.empty() || g[0] != LaurentPoly(1))
            throw NonUnitConstantTerm("WeightFunc: G_0 must be 1");
        WeightFunc w;
        w.g_ = std::move(g);
        return w;
    }

    /// Fully formal weight: G_k = g_k for 1 <= k <= order.
    static WeightFunc formal(int order) {
        std::vector<LaurentPoly> g;
        g.emplace_back(1);
        for (int k = 1; k <= order; ++k) g.push_back(LaurentPoly::variable(var_g(k)));
        return from_coefficients(std::move(g));
    }

    /// Exponential family truncated at the given order: G_k = 1/k!.
    static WeightFunc exp_truncated(int order) {
        std::vector<LaurentPoly> g;
        for (int k = 0; k <= order; ++k)
            g.emplace_back(Rational(1) / Rational(factorial(static_cast<unsigned>(k))));
        return from_coefficients(std::move(g));
    }

    bool has_parameters() const { return has_c_; }
    const std::vector<Rational>& parameters() const {
        if (!has_c_)
            throw WeightMismatch("WeightFunc: parameter list requested but only "
                                 "generating coefficients were supplied");
        return c_;
    }

    /// True when any stored coefficient is symbolic.
    bool is_formal() const {
        for (const auto& g : g_)
            if (!g.is_constant()) return true;
        return false;
    }

    /// Largest k for which G_k is known; -1 means all k (parameter form).
    int truncation_order() const {
        return has_c_ ? -1 : static_cast<int>(g_.size()) - 1;
    }

    /// G_k as a polynomial (constant in parameter form).
    LaurentPoly g_coefficient(int k) const {
        if (k < 0) throw Error("WeightFunc: negative coefficient index");
        if (has_c_) return LaurentPoly(elementary_symmetric(k));
        if (k >= static_cast<int>(g_.size()))
            throw Error("WeightFunc: coefficient G_" + std::to_string(k) +
                        " beyond truncation order " +
                        std::to_string(truncation_order()));
        return g_[static_cast<std::size_t>(k)];
    }

    /// G evaluated at (m b): the series sum_k G_k m^k b^k up to order D.
    BetaSeries g_at(const Rational& m, int D) const {
        BetaSeries s(D);
        Rational mk(1);
        for (int k = 0; k <= D; ++k) {
            s.set_coefficient(k, g_coefficient(k) * mk);
            mk *= m;
        }
        return s;
    }

    /// rho_l to order D under the fixed conventions (rho_0 = rho_{-1} = 1).
    BetaSeries rho(int l, int D) const {
        BetaSeries s = BetaSeries::one(D);
        if (l > 0) {
            for (int k = 1; k <= l; ++k) s *= g_at(Rational(k), D);
        } else if (l < 0) {
            for (int k = 1; k <= -l - 1; ++k) s *= g_at(Rational(-k), D).inverse();
        }
        return s;
    }

    /// Normalization r0(M) to order D: prod_{j=1..M} rho_j for M >= 0, and
    /// for M = -N < 0 the polynomial prod_{k=1}^{N-1} G(-k b)^{N-k}, which
    /// equals 1/(rho_{-1} ... rho_{-N}) without any series inversion.
    BetaSeries r0_of(int M, int D) const {
        BetaSeries s = BetaSeries::one(D);
        if (M >= 0) {
            for (int j = 1; j <= M; ++j) s *= rho(j, D);
        } else {
            const int N = -M;
            for (int k = 1; k <= N - 1; ++k) s *= g_at(Rational(-k), D).pow(N - k);
        }
        return s;
    }

    /// Content product at charge N:
    ///   r_lambda(N) = r0(N) * prod over cells (i,j) of G((N + j - i) b).
    /// The weighted-count generating series use charge 0, where r0(0) = 1 and
    /// this is just the product over shifted contents.
    BetaSeries content_product(const Partition& lambda, int charge, int D) const {
        BetaSeries s = r0_of(charge, D);
        for (int c : contents(lambda)) s *= g_at(Rational(charge + c), D);
        return s;
    }

    /// Product G_{lambda_1} G_{lambda_2} ... of generating coefficients.
    LaurentPoly g_product(const Partition& lambda) const {
        LaurentPoly p(1);
        for (int part : lambda) p *= g_coefficient(part);
        return p;
    }

    /// Weight of a tuple of k simultaneous branch points with the given
    /// colengths: (1/k!) sum over ordered injective assignments of the
    /// parameters c to the branch points of prod_i c_{assigned(i)}^{l_i}.
    /// Requires parameter form with at least k parameters.
    Rational tuple_weight(const std::vector<int>& colengths) const {
        if (!has_c_)
            throw WeightMismatch("tuple_weight: weight function has no parameter form");
        const std::size_t k = colengths.size();
        const std::size_t M = c_.size();
        if (k > M)
            throw InsufficientParameters(
                "tuple_weight: " + std::to_string(k) + " branch points but only " +
                std::to_string(M) + " parameters");
        // Sum over ordered injective maps {1..k} -> {1..M} via permutations
        // of each k-subset.
        std::vector<std::size_t> idx(k);
        Rational total(0);
        std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos,
                                                                   std::size_t start) {
            if (pos == k) {
                std::vector<std::size_t> perm = idx;
                std::sort(perm.begin(), perm.end());
                do {
                    Rational prod(1);
                    for (std::size_t i = 0; i < k; ++i)
                        prod *= pow_rational(c_[perm[i]],
                                             colengths[i]);
                    total += prod;
                } while (std::next_permutation(perm.begin(), perm.end()));
                return;
            }
            for (std::size_t j = start; j < M; ++j) {
                idx[pos] = j;
                choose(pos + 1, j + 1);
            }
        };
        choose(0, 0);
        return total / Rational(factorial(static_cast<unsigned>(k)));
    }

  private:
    WeightFunc() = default;

    /// e_k(c_1..c_M) by the one-row DP.
    Rational elementary_symmetric(int k) const {
        const int M = static_cast<int>(c_.size());
        if (k > M) return Rational(0);
        std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
        e[0] = 1;
        for (int i = 0; i < M; ++i)
            for (int j = std::min(k, i + 1); j >= 1; --j)
                e[static_cast<std::size_t>(j)] +=
                    c_[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j) - 1];
        return e[static_cast<std::size_t>(k)];
    }

    std::vector<Rational> c_;
    bool has_c_ = false;
    std::vector<LaurentPoly> g_;
};

}  // namespace hurwitz
