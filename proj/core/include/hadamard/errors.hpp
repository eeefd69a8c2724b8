#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hadamard {

// Precondition violations are caller mistakes (bad inputs, unusable
// configuration); numerical failures happen despite valid inputs.  The CLI
// maps the two onto distinct exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

// A coefficient that must be nonzero vanishes, so no termwise inverse exists.
struct ZeroCoefficient : PreconditionError {
    std::size_t index;
    explicit ZeroCoefficient(const std::string& where, std::size_t n)
        : PreconditionError(where + ": coefficient " + std::to_string(n) + " is zero"),
          index(n) {}
};

// A truncation-shrinking operation was asked to drop the whole germ.
struct OrderUnderflow : PreconditionError {
    explicit OrderUnderflow(const std::string& where)
        : PreconditionError(where + ": requested shift meets or exceeds the truncation order") {}
};

// 1 + h_n * b_n vanished, so the entire-correction denominator blows up.
struct ResonantCoefficient : PreconditionError {
    std::size_t index;
    explicit ResonantCoefficient(const std::string& where, std::size_t n)
        : PreconditionError(where + ": resonance at coefficient " + std::to_string(n) +
                            " (1 + h_n*b_n vanishes)"),
          index(n) {}
};

// The characteristic polynomial vanished at an integer, so the coefficient
// recurrence cannot be solved there (the source germ has a zero coefficient).
struct CharacteristicRoot : PreconditionError {
    std::size_t index;
    explicit CharacteristicRoot(const std::string& where, std::size_t n)
        : PreconditionError(where + ": characteristic polynomial vanishes at n = " +
                            std::to_string(n)),
          index(n) {}
};

struct InvalidParameters : PreconditionError {
    using PreconditionError::PreconditionError;
};

// A contour passes too close to a declared singular point or leaves an
// evaluator's validity domain.
struct DomainViolation : PreconditionError {
    using PreconditionError::PreconditionError;
};

// A contour fails to enclose (or exclude) the points the formula requires.
struct NonEnclosing : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Two local jets anchored at different points were combined.
struct BaseMismatch : PreconditionError {
    using PreconditionError::PreconditionError;
};

// The leading coefficient that divides a triangular solve is zero.
struct ZeroResidue : PreconditionError {
    using PreconditionError::PreconditionError;
};

// A linear system is rank-deficient beyond tolerance (and inconsistent).
struct SingularSystem : NumericalError {
    using NumericalError::NumericalError;
};

// An iteration failed to converge within its budget.
struct NonConvergence : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace hadamard
