#pragma once

#include <stdexcept>
#include <string>

namespace lowbits {

/// Invalid key, transform, or policy configuration (e.g. modulus too small
/// for the requested transform, odd key size).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Signature value outside [0, n). Distinct from a verifier returning false:
/// such a value is not a well-formed signature at all.
struct MalformedSignatureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Container bytes do not parse (bad magic, bad version, inconsistent lengths).
struct MalformedContainerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The odd-case construction was handed an even encoded message or vice versa.
struct WrongCaseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The compared-bit-count violates 3*(b+3) < modulus bits and no override was given.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brute-force enumeration request above the supported ceiling.
struct CapacityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The forge output fell outside the exhaustive ground-truth root set.
/// Carries the counterexample; must never fire.
struct OracleDivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A guaranteed postcondition failed. Indicates an implementation bug.
struct InternalCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace lowbits
