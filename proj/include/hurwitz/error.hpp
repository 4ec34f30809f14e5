#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class for all library errors.  Every failure mode the library can
/// signal derives from this, so callers may catch the family with one handler
/// or discriminate on the concrete type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact polynomial division was requested but the divisor does not divide
/// the dividend (nonzero remainder).
struct NotDivisible : Error {
    using Error::Error;
};

/// Power-series inversion requires a unit constant term (= 1 in this library).
struct NonUnitConstantTerm : Error {
    using Error::Error;
};

/// An operation needed a capability the supplied weight function does not
/// have (e.g. parameter-based weights were required but only generating
/// coefficients were given).
struct WeightMismatch : Error {
    using Error::Error;
};

/// A list of ramification profiles was empty where at least one is required.
struct EmptyProfileList : Error {
    using Error::Error;
};

/// The finite weight-parameter list is too short to support the requested
/// number of simultaneous branch points.
struct InsufficientParameters : Error {
    using Error::Error;
};

/// A linear system did not determine its unknowns (too few independent
/// equations for the requested truncation level).
struct Underdetermined : Error {
    using Error::Error;
};

/// An overdetermined linear system failed its consistency re-check.  This is
/// a correctness tripwire: it should never fire for valid inputs.
struct InconsistentSystem : Error {
    using Error::Error;
};

/// A numeric evaluation required pairwise-distinct points but got duplicates.
struct RepeatedPoint : Error {
    using Error::Error;
};

/// A computation exceeded the configured term-count budget.
struct TooLarge : Error {
    using Error::Error;
};

}  // namespace hurwitz
