#pragma once

/// Truncated power series in the deformation variable beta.
///
/// A BetaSeries holds exact coefficients c_0..c_D (each a LaurentPoly in the
/// remaining variables) for a series c_0 + c_1 b + ... + c_D b^D + O(b^{D+1}).
/// All arithmetic truncates at the stored order, so products of generating
/// functions stay finite objects.  Orders mix by truncating to the smaller
/// one, which is the only sound semantics for O(.) bookkeeping.

#include <algorithm>
#include <string>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/laurent.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

class BetaSeries {
  public:
    /// Zero series of the given truncation order.
    explicit BetaSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw Error("BetaSeries: negative order");
    }

    static BetaSeries constant(int order, const LaurentPoly& value) {
        BetaSeries s(order);
        s.coeffs_[0] = value;
        return s;
    }
    static BetaSeries one(int order) { return constant(order, LaurentPoly(1)); }

    /// Build from explicit coefficients c_0.., truncated/padded to order.
    static BetaSeries from_coefficients(int order, std::vector<LaurentPoly> coeffs) {
        BetaSeries s(order);
        for (std::size_t k = 0; k < coeffs.size() && k <= static_cast<std::size_t>(order); ++k)
            s.coeffs_[k] = std::move(coeffs[k]);
        return s;
    }

    /// Read a polynomial in beta as a series (degrees above order drop;
    /// negative beta-degrees are rejected).
    static BetaSeries from_poly(const LaurentPoly& p, int order) {
        if (p.min_degree(var_beta()) < 0)
            throw Error("BetaSeries: negative beta exponent in polynomial");
        BetaSeries s(order);
        for (int k = 0; k <= order; ++k) s.coeffs_[k] = p.coefficient_of(var_beta(), k);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Multiplicative identity with this series' truncation order (generic
    /// ring hook used by the determinant code).
    BetaSeries ring_one() const { return one(order()); }

    const LaurentPoly& coefficient(int k) const {
        if (k < 0 || k > order()) throw Error("BetaSeries: coefficient index out of range");
        return coeffs_[static_cast<std::size_t>(k)];
    }
    void set_coefficient(int k, LaurentPoly c) {
        if (k < 0 || k > order()) throw Error("BetaSeries: coefficient index out of range");
        coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const LaurentPoly& c) { return c.is_zero(); });
    }

    BetaSeries truncated(int order) const {
        BetaSeries s(order);
        for (int k = 0; k <= std::min(order, this->order()); ++k) s.coeffs_[k] = coeffs_[k];
        return s;
    }

    friend BetaSeries operator+(const BetaSeries& a, const BetaSeries& b) {
        BetaSeries s(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return s;
    }
    friend BetaSeries operator-(const BetaSeries& a, const BetaSeries& b) {
        BetaSeries s(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return s;
    }
    BetaSeries operator-() const {
        BetaSeries s = *this;
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    friend BetaSeries operator*(const BetaSeries& a, const BetaSeries& b) {
        BetaSeries s(std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= s.order(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return s;
    }
    BetaSeries& operator+=(const BetaSeries& o) { return *this = *this + o; }
    BetaSeries& operator-=(const BetaSeries& o) { return *this = *this - o; }
    BetaSeries& operator*=(const BetaSeries& o) { return *this = *this * o; }

    friend BetaSeries operator*(BetaSeries a, const LaurentPoly& c) {
        for (auto& x : a.coeffs_) x *= c;
        return a;
    }
    friend BetaSeries operator*(BetaSeries a, const Rational& c) {
        for (auto& x : a.coeffs_) x *= c;
        return a;
    }
    friend BetaSeries operator*(const Rational& c, BetaSeries a) { return a * c; }

    friend bool operator==(const BetaSeries& a, const BetaSeries& b) {
        if (a.order() != b.order()) return false;
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BetaSeries& a, const BetaSeries& b) { return !(a == b); }

    /// Multiplicative inverse mod b^{order+1}.  The constant coefficient must
    /// be a unit of the coefficient ring here: a nonzero rational constant or
    /// a single invertible term.  Coefficients then satisfy the standard
    /// recursion b_k = -a_0^{-1} sum_{j=1..k} a_j b_{k-j}.
    BetaSeries inverse() const {
        const LaurentPoly& a0 = coeffs_[0];
        if (a0.is_zero() || a0.term_count() != 1)
            throw NonUnitConstantTerm("BetaSeries::inverse: constant term " + a0.str() +
                                      " is not a unit");
        LaurentPoly a0inv = a0.pow(-1);
        BetaSeries s(order());
        s.coeffs_[0] = a0inv;
        for (int k = 1; k <= order(); ++k) {
            LaurentPoly acc;
            for (int j = 1; j <= k; ++j) acc += coeffs_[j] * s.coeffs_[k - j];
            s.coeffs_[k] = -(a0inv * acc);
        }
        return s;
    }

    BetaSeries pow(int e) const {
        BetaSeries base = e < 0 ? inverse() : *this;
        int k = e < 0 ? -e : e;
        BetaSeries acc = one(order());
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /// Substitute an exact value for a (non-beta) variable in every
    /// coefficient.
    BetaSeries substituted(VarId v, const Rational& value) const {
        BetaSeries s(order());
        for (int k = 0; k <= order(); ++k) s.coeffs_[k] = coeffs_[k].substituted(v, value);
        return s;
    }

    /// Collapse to a single polynomial sum_k c_k beta^k.
    LaurentPoly to_poly() const {
        LaurentPoly out;
        for (int k = 0; k <= order(); ++k)
            out += coeffs_[k] * LaurentPoly::variable(var_beta(), k);
        return out;
    }

    std::string str() const { return to_poly().str() + " + O(beta^" + std::to_string(order() + 1) + ")"; }

  private:
    std::vector<LaurentPoly> coeffs_;
};

}  // namespace hurwitz
