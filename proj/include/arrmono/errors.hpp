#pragma once

#include <stdexcept>
#include <string>

namespace arrmono {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (arrangement file, coefficient token, partition string).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally invalid arrangement: duplicate lines or fewer than two lines.
struct InvalidArrangement : Error {
    using Error::Error;
};

/// The arrangement violates the "only double and triple points" hypothesis
/// every monodromy formula here depends on.
struct HypothesisViolation : Error {
    using Error::Error;
};

/// The requested partition does not give three linearly dependent,
/// pairwise independent products.
struct NotAPencil : Error {
    using Error::Error;
};

/// The products are dependent but the base locus is not the expected
/// set of m^2 reduced points.
struct DegeneratePencil : Error {
    using Error::Error;
};

/// A catalog parameter fails its structural validation.
struct ParameterRejection : Error {
    using Error::Error;
};

/// Arithmetic or geometric precondition failure (division by zero,
/// meet of equal lines, mismatched degrees).
struct DomainError : Error {
    using Error::Error;
};

} // namespace arrmono
