#pragma once

#include <stdexcept>
#include <string>

namespace fermiscope {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched or unsupported matrix/vector dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input matrix failed the symmetric positive-definite check.
class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

/// Eigenvalues of K^T K could not be paired into symplectic eigenvalues.
class NumericalPairingError : public Error {
public:
    using Error::Error;
};

/// Invalid sampled-wavefunction grid (size, spacing, parity).
class GridError : public Error {
public:
    using Error::Error;
};

/// Wavefunction samples are identically zero.
class EmptyWavefunction : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration (CLI layer; exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace fermiscope
