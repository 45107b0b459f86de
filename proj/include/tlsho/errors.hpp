// errors.hpp — exception hierarchy shared by all tlsho modules

#pragma once

#include <stdexcept>

namespace tlsho {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Oscillator occupation leaks past the Fock-space cutoff.
struct TruncationError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

// Operation applied to a density matrix on the wrong (sub)system.
struct BasisError : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

// Hermiticity, trace or positivity lost during evolution.
struct InvariantViolation : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace tlsho
