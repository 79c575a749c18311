#pragma once

#include <stdexcept>
#include <string>

namespace oddortho {

/// Rank n < 1, or a parabolic index outside 1..n.
struct InvalidRank : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Vectors or group elements of different rank combined.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value violates a structural constraint of its type (non-disjoint (I,J),
/// non-dominant highest weight, malformed signed permutation, ...).
struct ConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its precondition (e.g. odd k for the
/// t = k classification, or the Siegel datum handed to a k < n pole test).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Scalar outside the representable domain (non half-integral value where a
/// half-integer is required, unsupported evaluation point, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exhaustive enumeration would exceed the configured size cap.
struct ResourceGuardError : std::length_error {
    using std::length_error::length_error;
};

}  // namespace oddortho
