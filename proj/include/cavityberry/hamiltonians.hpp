#pragma once

#include "cavityberry/types.hpp"

namespace cavityberry {

/// Jaynes-Cummings parameters; the detuning is always derived, never stored.
struct JCParams {
  double omega = 1.0;  // mode frequency
  double nu = 1.0;     // atomic transition frequency
  double g = 0.0;      // coupling, >= 0
  double delta() const { return nu - omega; }
  void validate() const;
};

struct RabiParams {
  double omega = 1.0;  // > 0, harmonic confinement present
  double nu = 1.0;
  double g = 0.0;  // >= 0
  void validate() const;
};

/// Three-level (Lambda) atom driven by one classical field and one cavity
/// mode; chi is the combined drive angle (drive frequency times time, plus
/// the field phase) that only ever appears inside cos(chi).
struct LambdaParams {
  double E1 = 0.0;
  double E2 = 0.0;
  double E3 = 0.0;
  double kappa = 0.0;
  double g = 0.0;
  double chi = 0.0;
  double delta() const { return E3 - E1; }
};

// Interaction-picture JC Hamiltonian on n_max Fock levels (dimension 2 n_max):
//   (delta/2) I (x) sz + g sqrt(2) (a^dag (x) s- + a (x) s+).
ComplexMatrix build_jc(const JCParams& params, TruncationDim N);

// JC Hamiltonian with the field phase-shifted by phi: the coupling picks up
// e^{-i phi} on a^dag (x) s- and e^{+i phi} on a (x) s+.  Equal to
// U(phi) H U(phi)^dag with U(phi) = exp(-i phi n) (x) I.
ComplexMatrix build_jc_rotated(const JCParams& params, PhaseAngle phi, TruncationDim N);

// Full Rabi Hamiltonian, real-symmetric in this basis:
//   omega (p^2 + x^2)/2 + (nu/2) I (x) sz + 2 g x (x) sx.
ComplexMatrix build_rabi(const RabiParams& params, TruncationDim N);

// Phase-shifted Rabi Hamiltonian, U(phi) H U(phi)^dag.  With this library's
// quadrature pairing the coupling reads 2 g (cos(phi) x + sin(phi) p) sx.
ComplexMatrix build_rabi_rotated(const RabiParams& params, PhaseAngle phi, TruncationDim N);

/// U(phi) = diag(e^{-i n phi}) (x) I_2.
ComplexMatrix phase_rotation_operator(PhaseAngle phi, TruncationDim N);

/// Semiclassical two-level Hamiltonian decomposed as B . sigma + scalar * I.
struct EffectiveField {
  double bx = 0.0;
  double by = 0.0;
  double bz = 0.0;
  double scalar = 0.0;  // harmonic offset for the Rabi model, 0 for JC
};

// The (x, p)-plane coordinates are rotated by the field phase before the
// couplings are read off: x_phi = cos(phi) x - sin(phi) p,
// p_phi = sin(phi) x + cos(phi) p.
//
// JC:   B = (g x_phi, g p_phi, delta/2), scalar 0.
// Rabi: B = (2 g x_phi, 0, nu/2), scalar omega (x^2 + p^2)/2.  By is zero
//       identically: the field never leaves the y = 0 plane.
EffectiveField effective_field(const JCParams& params, double x, double p, PhaseAngle phi);
EffectiveField effective_field(const RabiParams& params, double x, double p, PhaseAngle phi);

// Bare-basis interaction matrix of the Lambda atom at semiclassical cavity
// coordinate x: diagonal (E1, E2, E3), entries (1,3) = kappa cos(chi) and
// (2,3) = 2 g x (1-based), real symmetric.
ComplexMatrix build_lambda_potential_matrix(const LambdaParams& params, double x);

}  // namespace cavityberry
