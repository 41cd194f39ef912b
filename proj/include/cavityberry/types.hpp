#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace cavityberry {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a documented precondition.
struct ValidationError : Error {
  using Error::Error;
};

struct NonHermitianInput : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

struct BandTrackingAmbiguity : Error {
  using Error::Error;
};

struct DegenerateBand : Error {
  using Error::Error;
};

struct TruncationLeak : Error {
  using Error::Error;
};

struct ZeroOverlap : Error {
  using Error::Error;
};

struct DegenerateParameters : Error {
  using Error::Error;
};

struct UndefinedMixingAngle : Error {
  using Error::Error;
};

struct EmptyGrid : Error {
  using Error::Error;
};

/// All numerical tolerances and guard thresholds in one place.
struct NumericSettings {
  double hermiticity_tol = 1e-10;    // max |H - H^dag| entry accepted as Hermitian
  double residual_tol = 1e-10;       // relative eigenpair residual
  double orthonormality_tol = 1e-10; // |<v_i,v_j> - delta_ij| bound
  double gap_floor_rel = 1e-8;       // band gap floor, relative to the spectral range
  double overlap_floor = 0.5;        // minimum consecutive tracking overlap modulus
  double ambiguity_gap = 0.1;        // required lead of the best tracking candidate
  double truncation_guard = 1e-8;    // max occupation of the guarded top Fock levels
  int guard_levels = 5;              // number of top Fock levels watched by the guard
  double zero_overlap_tol = 1e-6;    // Wilson-loop zero-overlap guard
  int threads = 0;                   // 0 = one worker per hardware thread
};

const NumericSettings& default_settings();

/// Number of retained Fock levels |0> ... |n_max-1>.
struct TruncationDim {
  explicit TruncationDim(int n_max_) : n_max(n_max_) {
    if (n_max < 2) throw ValidationError("TruncationDim: n_max must be >= 2");
  }
  int n_max;
};

/// Angle in radians, reduced to [0, 2*pi).
struct PhaseAngle {
  PhaseAngle(double radians = 0.0);  // NOLINT(google-explicit-constructor)
  double value;
};

}  // namespace cavityberry
