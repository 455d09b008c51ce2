#pragma once

#include <stdexcept>
#include <string>

namespace seqbell {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside its mathematical domain (angle ranges, parameter bounds).
struct DomainError : Error {
    using Error::Error;
};

/// A matrix required to be Hermitian is not.
struct NotHermitianError : Error {
    using Error::Error;
};

/// Requested object exceeds a configured size cap.
struct CapacityError : Error {
    using Error::Error;
};

/// Conditioning on a zero-probability event.
struct ConditioningError : Error {
    using Error::Error;
};

/// A distribution that should be normalized is not.
struct NormalizationError : Error {
    using Error::Error;
};

/// Input data violates a structural requirement (e.g. signaling).
struct ConsistencyError : Error {
    using Error::Error;
};

/// An SDP solve did not reach an acceptable solution.
struct SolverError : Error {
    using Error::Error;
};

/// A search did not locate the requested feature.
struct NotFoundError : Error {
    using Error::Error;
};

}  // namespace seqbell
