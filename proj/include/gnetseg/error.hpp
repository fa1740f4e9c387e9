#pragma once

#include <stdexcept>
#include <string>

namespace gnetseg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension or channel-count mismatch between tensors/operators.
struct ShapeError : Error {
    using Error::Error;
};

// Numerically impossible request (singular matrix, ...).
struct MathError : Error {
    using Error::Error;
};

// Label/mask encoding violations.
struct CodecError : Error {
    using Error::Error;
};

// Malformed file contents. Message carries a byte offset where known.
struct FormatError : Error {
    using Error::Error;
};

// Invalid build/runtime configuration.
struct ConfigError : Error {
    using Error::Error;
};

// API misuse (stale trace, mismatched head/loss, ...).
struct UsageError : Error {
    using Error::Error;
};

struct CalibrationError : Error {
    using Error::Error;
};

struct TrainingError : Error {
    using Error::Error;
};

} // namespace gnetseg
