#pragma once

#include <stdexcept>
#include <string>

namespace natmap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vector with non-negative Hermitian norm cannot represent an interior point.
struct NonNegativeNormError : Error {
  using Error::Error;
};

struct NotNullError : Error {
  using Error::Error;
};

struct SpaceMismatchError : Error {
  using Error::Error;
};

struct FormPreservationError : Error {
  using Error::Error;
};

struct NotUnitaryError : Error {
  using Error::Error;
};

struct GeneratorMismatchError : Error {
  using Error::Error;
};

struct UnmappedAtomError : Error {
  using Error::Error;
};

struct DegenerateOrbitError : Error {
  using Error::Error;
};

// Measure explicitly excluded from the barycenter construction
// (exactly two atoms of equal weight).
struct ExcludedMeasureError : Error {
  using Error::Error;
};

// Pushed boundary data concentrates at least half of the mass on one atom.
struct ElementaryDataError : Error {
  using Error::Error;
};

struct DegenerateFormsError : Error {
  using Error::Error;
};

struct SingularSystemError : Error {
  using Error::Error;
};

struct SingularDenominatorError : Error {
  using Error::Error;
};

// Simplex functional evaluated at a non-interior point.
struct SimplexBoundaryError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace natmap
