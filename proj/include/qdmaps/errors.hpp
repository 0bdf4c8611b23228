#pragma once

#include <stdexcept>
#include <string>

namespace qdmaps {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// inverse(): a pivot fell below the singularity threshold.
struct SingularMatrix : Error {
  using Error::Error;
};

// hermitian_eigs(): input failed the Hermiticity pre-check.
struct NotHermitian : Error {
  using Error::Error;
};

// hermitian_eigs(): sweep budget exhausted before the off-diagonal target.
struct NoConvergence : Error {
  using Error::Error;
};

// A(t2,t1) = A(t2,0) A(t1,0)^{-1} is undefined because A(t1,0) is singular.
struct SingularIntermediateMap : Error {
  using Error::Error;
};

// choi_from_action(): the supplied action failed the linearity spot-check.
struct NonLinearAction : Error {
  using Error::Error;
};

// kraus_from_bmap(): the map is not completely positive, no Kraus form exists.
struct NotCP : Error {
  using Error::Error;
};

// concurrence(): input is not a valid two-qubit density matrix.
struct InvalidState : Error {
  using Error::Error;
};

// classify(): CP flag combination outside the supported classification rows.
struct InconsistentFlags : Error {
  using Error::Error;
};

// scan/trajectory grids must be non-empty.
struct EmptyGrid : Error {
  using Error::Error;
};

// Dilation oracle refuses environments that would exceed the dimension cap.
struct DimensionGuard : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct IOError : Error {
  using Error::Error;
};

struct InvalidConfig : Error {
  using Error::Error;
};

}  // namespace qdmaps
