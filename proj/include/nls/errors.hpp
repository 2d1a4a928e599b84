#pragma once

#include <stdexcept>
#include <string>

namespace nls {

// Base class of every error the library throws.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid user-supplied specification: bad parameter value, malformed or
// unknown config key, inconsistent grid bounds.
struct ConfigError : Error {
  using Error::Error;
};

// The integrator hit its step budget before reaching the end point.
struct StepLimitExceeded : Error {
  using Error::Error;
};

// Trajectory value or slope overflowed or became NaN.
struct NonFiniteState : Error {
  using Error::Error;
};

// Tabulated potential queried outside its sample span.
struct TabulatedOutOfRange : Error {
  using Error::Error;
};

// Shared amplitude denominator vanished relative to the magnitude of its
// terms; signals a resonance or numerical breakdown at this energy.
struct DegenerateDenominator : Error {
  using Error::Error;
};

// Wavenumber below the supported minimum; amplitudes divide by k.
struct KTooSmall : Error {
  using Error::Error;
};

// Every point of a sweep failed.
struct TotalSweepFailure : Error {
  using Error::Error;
};

}  // namespace nls
