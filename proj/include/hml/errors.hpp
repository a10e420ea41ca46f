#pragma once

#include <stdexcept>
#include <string>

namespace hml {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// zeta(s) requested at the pole s = 1.
struct PoleAtOneError : DomainError {
    using DomainError::DomainError;
};

// The requested accuracy cannot be met within internal series/term limits.
struct PrecisionExhaustedError : Error {
    using Error::Error;
};

// Z(t) produced an imaginary residue above the documented tolerance.
struct ImaginaryResidueError : Error {
    using Error::Error;
};

// Requested table size exceeds the configured capacity limit.
struct CapacityError : Error {
    using Error::Error;
};

// Index or window outside the range covered by a table.
struct OutOfRangeError : Error {
    using Error::Error;
};

// A smoothed-sum routine was handed a table shorter than its support needs.
struct TableTooSmallError : OutOfRangeError {
    using OutOfRangeError::OutOfRangeError;
};

// Corrupt or incompatible on-disk table image.
struct CacheFormatError : Error {
    using Error::Error;
};

// Malformed CLI/run configuration.
struct ConfigParseError : Error {
    using Error::Error;
};

// File could not be read or written.
struct IoError : Error {
    using Error::Error;
};

// Quadrature sampled a non-finite integrand value.
struct NonFiniteSampleError : Error {
    using Error::Error;
};

// Stationary-phase inputs violate the lemma's hypotheses.
struct ConditionViolationError : DomainError {
    using DomainError::DomainError;
};

// Unknown enum/string selector.
struct UnknownKindError : DomainError {
    using DomainError::DomainError;
};

}  // namespace hml
