#pragma once

#include "cavityberry/hamiltonians.hpp"
#include "cavityberry/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cavityberry {

/// Uniform closed loop phi_k = 2 pi k / K, k = 0 ... K-1; index K wraps to 0.
struct LoopSpec {
  explicit LoopSpec(int steps_) : steps(steps_) {
    if (steps < 8) throw ValidationError("LoopSpec: need at least 8 steps");
  }
  int steps;
  double phi(int k) const { return 2.0 * M_PI * double(k) / double(steps); }
};

enum class Branch { plus, minus };

inline double branch_sign(Branch b) { return b == Branch::plus ? 1.0 : -1.0; }

/// How to pick the tracked band at phi = 0.
struct BandSelector {
  static BandSelector ordinal(int index);
  /// Band whose phi = 0 eigenvalue lies closest to `target`.
  static BandSelector nearest_eigenvalue(double target, std::string label);

  bool by_ordinal = true;
  int index = 0;
  double target = 0.0;
  std::string label;
};

/// Exact eigenvalue of the JC dressed pair {|n,2>, |n+1,1>}:
/// +/- sqrt(delta^2/4 + 2 g^2 (n+1)).
double jc_band_eigenvalue(double delta, double g, int n, Branch branch);

/// Selector for the JC band labelled by excitation number n and branch.
BandSelector jc_band(const JCParams& params, int n, Branch branch);

/// One tracked eigenstate band sampled around the closed phi loop.
struct StateFamily {
  std::vector<ComplexVector> states;  // K normalized vectors, dimension 2 n_trunc
  std::string band_label;
  int n_trunc = 0;
  double min_overlap = 1.0;     // min consecutive |<psi_k|psi_{k+1}>|, wrap included
  double top_occupation = 0.0;  // max occupation of the guarded top Fock levels
};

using RotatedBuilder = std::function<ComplexMatrix(double phi)>;

// Diagonalizes the builder's Hamiltonian at every phi_k and follows one band
// by maximal overlap modulus with the previous step.  The K diagonalizations
// run on a worker pool in fixed-size blocks; results do not depend on the
// thread count.
//
// Guards (all reported with the offending phi_k):
//  - DegenerateBand        gap to the nearest neighbour level below the floor
//  - BandTrackingAmbiguity top two overlap moduli too close, or best overlap
//                          below the floor
//  - TruncationLeak        tracked state occupies the guarded top Fock levels
StateFamily eigenstate_family(const RotatedBuilder& builder, const LoopSpec& loop,
                              const BandSelector& band, int n_trunc,
                              const NumericSettings& settings = default_settings());

/// Geometric phase of a closed family plus its diagnostics.
struct BerryPhaseResult {
  double gamma = 0.0;    // principal value in (-pi, pi]
  double raw_sum = 0.0;  // accumulated step angles before reduction
  int steps = 0;
  int n_trunc = 0;
  double min_overlap = 1.0;
  double top_occupation = 0.0;
};

// Gauge-invariant discrete loop phase
//   gamma = -arg prod_k <psi_k | psi_{k+1}>,   psi_K = psi_0.
// Multiplying any family member by a unit phase leaves gamma unchanged.
BerryPhaseResult wilson_loop_phase(const StateFamily& family,
                                   const NumericSettings& settings = default_settings());

// Closed-form JC loop phase, +/- pi (1 - (delta/2)/sqrt(delta^2/4 + 2 g^2 (n+1))),
// returned as a principal value (the 2 pi n ambiguity is dropped).
double jc_analytic_phase(double delta, double g, int n, Branch branch);

/// Phase from encircling the JC conical intersection at radius R:
/// +/- pi (1 - (delta/2)/sqrt(delta^2/4 + g^2 R^2)).
double ci_encircle_phase(double delta, double g, double radius, Branch branch);

/// E x epsilon Jahn-Teller loop phase: +/- pi (1 - nu/sqrt(nu^2 + 4 g^2 R^2)).
double jt_encircle_phase(double nu, double g, double radius, Branch branch);

// Independent oracle: a family generated by conjugation with exp(-i phi n)
// has continuum loop phase 2 pi <n> of its phi = 0 state, mod 2 pi.  The
// state lives in the composite field (x) spin space.
double number_expectation_phase(const ComplexVector& state);

/// min over integers k of |a - b + 2 pi k|; symmetric, at most pi.
double mod2pi_distance(double a, double b);

/// Reduce an angle to (-pi, pi].
double principal_angle(double angle);

}  // namespace cavityberry
