// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace rsosq {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A series or product evaluation cannot reach the requested tolerance
// (e.g. Im(tau) below the configured minimum, or runaway cutoffs).
struct NonConvergent : Error {
  using Error::Error;
};

// A square root in strict real mode received a radicand that is negative
// beyond the zero tolerance.
struct NegativeRadicand : Error {
  using Error::Error;
};

// A weight-dependent denominator vanished; the face weight is not defined
// at this dynamical weight.
struct DegenerateWeight : Error {
  using Error::Error;
};

// The spectral parameter sits on (or too close to) a pole of the
// coefficient functions.
struct PoleAtU : Error {
  using Error::Error;
};

// The requested quantity does not exist for this model family or parameter
// combination (e.g. the square-root factorization of the crossing
// multiplier outside types C/D with odd reduced denominator).
struct NotApplicable : Error {
  using Error::Error;
};

} // namespace rsosq
