#pragma once

/// Small dense matrices over exact rings.
///
/// Everything here targets the tiny sizes this library meets (dimension at
/// most ~8): Laplace expansion with memoized minors for determinants over an
/// arbitrary commutative ring (rationals, polynomials, truncated series),
/// and fraction-free-enough Gaussian elimination over the rationals for the
/// exact inverses used in basis changes.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/laurent.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

template <typename Ring>
using Matrix = std::vector<std::vector<Ring>>;

/// Multiplicative identity of a ring, produced from a sample element so
/// generic code can work with types whose constructors need context (e.g.
/// series that carry a truncation order).
inline Rational ring_one(const Rational&) { return Rational(1); }
inline LaurentPoly ring_one(const LaurentPoly&) { return LaurentPoly(1); }
template <typename Ring>
Ring ring_one(const Ring& sample) {
    return sample.ring_one();
}

/// Determinant by Laplace expansion along rows, memoizing minors by the
/// bitmask of consumed columns.  Cost O(2^n n) ring operations, and it needs
/// no division, so it applies to polynomial and series entries directly.
template <typename Ring>
Ring laplace_det(const Matrix<Ring>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw Error("laplace_det: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw Error("laplace_det: matrix is not square");
    if (n > 20) throw TooLarge("laplace_det: dimension too large");

    Ring zero = m[0][0] - m[0][0];
    std::map<std::uint32_t, Ring> memo;
    std::uint32_t full = (1u << n) - 1u;
    memo.emplace(full, ring_one(m[0][0]));

    // minor(mask): det of rows popcount(mask)..n-1 on columns outside mask
    std::function<const Ring&(std::uint32_t)> minor =
        [&](std::uint32_t mask) -> const Ring& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask));
        Ring acc = zero;
        int sign = 1;
        for (std::size_t col = 0; col < n; ++col) {
            if (mask & (1u << col)) continue;
            const Ring& sub = minor(mask | (1u << col));
            if (sign > 0)
                acc = acc + m[row][col] * sub;
            else
                acc = acc - m[row][col] * sub;
            sign = -sign;
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    return minor(0);
}

/// Exact inverse of a rational matrix via Gauss-Jordan elimination with
/// partial pivoting on nonzero entries.  Throws Underdetermined when the
/// matrix is singular.
inline Matrix<Rational> rational_inverse(Matrix<Rational> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw Error("rational_inverse: matrix is not square");
    Matrix<Rational> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Underdetermined("rational_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Vandermonde product Delta(x) = prod_{i<j} (x_j - x_i) (the later point
/// minus the earlier one); throws RepeatedPoint when two points coincide.
/// Note det(x_i^{n-j}) over decreasing powers equals prod_{i<j}(x_i - x_j) =
/// (-1)^{C(n,2)} Delta; ratios of two such determinants over the same index
/// set are convention-free, but bare Delta factors use this fixed order.
inline Rational vandermonde_product(const std::vector<Rational>& x) {
    Rational v(1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (x[i] == x[j])
                throw RepeatedPoint("vandermonde_product: repeated point " + x[i].get_str());
            v *= x[j] - x[i];
        }
    return v;
}

/// Vandermonde product as a polynomial in the given variables, same order.
inline LaurentPoly vandermonde_poly(const std::vector<VarId>& vars) {
    LaurentPoly v(1);
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            v *= LaurentPoly::variable(vars[j]) - LaurentPoly::variable(vars[i]);
    return v;
}

}  // namespace hurwitz
