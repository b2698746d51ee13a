#pragma once

#include <stdexcept>
#include <string>

namespace mintime {

/// Base class for all solver errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An input or intermediate value is NaN or infinite.
struct NonFiniteError : Error {
    using Error::Error;
};

/// A query lies outside the domain of the queried object.
struct OutOfDomainError : Error {
    using Error::Error;
};

/// Velocity-difference solve was requested with mu_u <= 0.
struct InvalidMuError : Error {
    using Error::Error;
};

/// The analytic bisection bracket failed to straddle the root.
/// This indicates a bug, not a data condition.
struct BracketFailureError : Error {
    using Error::Error;
};

/// Equal endpoint velocities: the problem cannot be normalized and must be
/// routed to the equal-velocity constructor instead.
struct DegenerateEqualVelocitiesError : Error {
    using Error::Error;
};

/// A closed-form case constructor was handed data that does not satisfy the
/// case conditions it was classified into.
struct ClassificationMismatchError : Error {
    using Error::Error;
};

/// The transcription oracle could not drive the endpoint penalty below
/// threshold, so its time estimate is not trustworthy.
struct OracleInconclusiveError : Error {
    using Error::Error;
};

}  // namespace mintime
