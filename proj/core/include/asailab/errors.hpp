#pragma once

#include <stdexcept>
#include <string>

namespace asailab {

// Input does not satisfy a schema or structural constraint.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical hypothesis required by the computation fails
// (narrow principality, ordinarity, NEZ, a pole of a prefactor, ...).
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested data (eigenvalues, coefficients) not available.
struct MissingDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace asailab
