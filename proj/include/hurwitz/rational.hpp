#pragma once

/// Exact arithmetic substrate.
///
/// All coefficient arithmetic in this library is exact rational arithmetic on
/// GMP's mpq_class; integers that can grow without bound (factorials, class
/// sizes, path counts) use mpz_class.  Nothing in the library ever rounds.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hurwitz/error.hpp"

namespace hurwitz {

using Integer = mpz_class;

/// Exact rational, always in canonical form.
///
/// mpq_class leaves num/den construction uncanonicalized, and GMP's
/// comparison routines are only defined on canonical values — so a bare
/// mpq_class(30, 6) is a latent equality bug.  This wrapper canonicalizes on
/// two-argument construction, rejects zero denominators with a catchable
/// error instead of a GMP abort, and refuses silent construction from
/// floating point.  Everything else (arithmetic, comparisons, get_str)
/// is inherited from mpq_class unchanged.
class Rational : public mpq_class {
  public:
    Rational() = default;
    Rational(const Rational&) = default;
    Rational(Rational&&) = default;
    Rational& operator=(const Rational&) = default;
    Rational& operator=(Rational&&) = default;
    /*implicit*/ Rational(const mpq_class& v) : mpq_class(v) {}
    /*implicit*/ Rational(mpq_class&& v) : mpq_class(std::move(v)) {}
    /*implicit*/ Rational(int n) : mpq_class(n) {}
    /*implicit*/ Rational(long n) : mpq_class(n) {}
    /*implicit*/ Rational(unsigned n) : mpq_class(n) {}
    /*implicit*/ Rational(unsigned long n) : mpq_class(n) {}
    /*implicit*/ Rational(const Integer& n) : mpq_class(n) {}
    Rational(float) = delete;
    Rational(double) = delete;
    Rational(long double) = delete;

    /// Any GMP expression template (results of mixed mpq/mpz arithmetic).
    template <class T, class U>
    /*implicit*/ Rational(const __gmp_expr<T, U>& e) : mpq_class(e) {}

    /// num/den, reduced to lowest terms with a positive denominator.
    template <class N, class D>
    Rational(const N& num, const D& den) : mpq_class(num, den) {
        if (get_den() == 0) throw Error("Rational: zero denominator");
        canonicalize();
    }

    using mpq_class::operator=;
};

/// n! as an exact integer.
inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Binomial coefficient C(n, k) as an exact integer.
inline Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Exact integer power of a rational.  Negative exponents invert; raising
/// zero to a negative power is a division-by-zero error from GMP, so guard.
inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    long k = e;
    if (k < 0) {
        if (b == 0) throw Error("pow_rational: zero base with negative exponent");
        b = Rational(1) / b;
        k = -k;
    }
    Rational acc(1);
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

/// Parse a rational from "p", "-p", or "p/q" text.  Throws Error on
/// malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw Error("parse_rational: malformed rational '" + text + "'");
    if (r.get_den() == 0)
        throw Error("parse_rational: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q" with
/// q > 0 and gcd(p, q) = 1.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace hurwitz
