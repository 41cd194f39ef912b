#include "cavityberry/hamiltonians.hpp"

#include "cavityberry/fock_algebra.hpp"

#include <cmath>

namespace cavityberry {

void JCParams::validate() const {
  if (!(g >= 0.0)) throw ValidationError("JCParams: g must be >= 0");
  if (!std::isfinite(omega) || !std::isfinite(nu) || !std::isfinite(g))
    throw ValidationError("JCParams: parameters must be finite");
}

void RabiParams::validate() const {
  if (!(omega > 0.0)) throw ValidationError("RabiParams: omega must be > 0");
  if (!(g >= 0.0)) throw ValidationError("RabiParams: g must be >= 0");
  if (!std::isfinite(omega) || !std::isfinite(nu) || !std::isfinite(g))
    throw ValidationError("RabiParams: parameters must be finite");
}

ComplexMatrix build_jc(const JCParams& params, TruncationDim N) {
  params.validate();
  const ComplexMatrix a = annihilation(N);
  const ComplexMatrix id_f = identity(N.n_max);
  ComplexMatrix h = 0.5 * params.delta() * kron(id_f, pauli(PauliAxis::z));
  h += params.g * std::sqrt(2.0) *
       (kron(a.adjoint().eval(), sigma_minus()) + kron(a, sigma_plus()));
  return h;
}

ComplexMatrix build_jc_rotated(const JCParams& params, PhaseAngle phi, TruncationDim N) {
  params.validate();
  const ComplexMatrix a = annihilation(N);
  const ComplexMatrix id_f = identity(N.n_max);
  const Complex phase = std::exp(Complex(0.0, -phi.value));
  ComplexMatrix h = 0.5 * params.delta() * kron(id_f, pauli(PauliAxis::z));
  h += params.g * std::sqrt(2.0) *
       (phase * kron(a.adjoint().eval(), sigma_minus()) +
        std::conj(phase) * kron(a, sigma_plus()));
  return h;
}

ComplexMatrix build_rabi(const RabiParams& params, TruncationDim N) {
  params.validate();
  const ComplexMatrix x = quadrature_x(N);
  const ComplexMatrix p = quadrature_p(N);
  const ComplexMatrix id_s = identity(2);
  ComplexMatrix h = 0.5 * params.omega * kron((p * p + x * x).eval(), id_s);
  h += 0.5 * params.nu * kron(identity(N.n_max), pauli(PauliAxis::z));
  h += 2.0 * params.g * kron(x, pauli(PauliAxis::x));
  return h;
}

ComplexMatrix build_rabi_rotated(const RabiParams& params, PhaseAngle phi, TruncationDim N) {
  params.validate();
  const ComplexMatrix x = quadrature_x(N);
  const ComplexMatrix p = quadrature_p(N);
  const ComplexMatrix id_s = identity(2);
  // cos(phi) x + sin(phi) p = U(phi) x U(phi)^dag for this p convention.
  const ComplexMatrix x_rot = std::cos(phi.value) * x + std::sin(phi.value) * p;
  ComplexMatrix h = 0.5 * params.omega * kron((p * p + x * x).eval(), id_s);
  h += 0.5 * params.nu * kron(identity(N.n_max), pauli(PauliAxis::z));
  h += 2.0 * params.g * kron(x_rot, pauli(PauliAxis::x));
  return h;
}

ComplexMatrix phase_rotation_operator(PhaseAngle phi, TruncationDim N) {
  ComplexMatrix u = ComplexMatrix::Zero(2 * N.n_max, 2 * N.n_max);
  for (int n = 0; n < N.n_max; ++n) {
    const Complex e = std::exp(Complex(0.0, -double(n) * phi.value));
    u(2 * n, 2 * n) = e;
    u(2 * n + 1, 2 * n + 1) = e;
  }
  return u;
}

namespace {

struct Rotated {
  double x;
  double p;
};

Rotated rotate_coordinates(double x, double p, double phi) {
  return {std::cos(phi) * x - std::sin(phi) * p,
          std::sin(phi) * x + std::cos(phi) * p};
}

}  // namespace

EffectiveField effective_field(const JCParams& params, double x, double p, PhaseAngle phi) {
  params.validate();
  const Rotated r = rotate_coordinates(x, p, phi.value);
  return {params.g * r.x, params.g * r.p, 0.5 * params.delta(), 0.0};
}

EffectiveField effective_field(const RabiParams& params, double x, double p, PhaseAngle phi) {
  params.validate();
  const Rotated r = rotate_coordinates(x, p, phi.value);
  return {2.0 * params.g * r.x, 0.0, 0.5 * params.nu,
          0.5 * params.omega * (x * x + p * p)};
}

ComplexMatrix build_lambda_potential_matrix(const LambdaParams& params, double x) {
  ComplexMatrix v = ComplexMatrix::Zero(3, 3);
  v(0, 0) = params.E1;
  v(1, 1) = params.E2;
  v(2, 2) = params.E3;
  v(0, 2) = v(2, 0) = params.kappa * std::cos(params.chi);
  v(1, 2) = v(2, 1) = 2.0 * params.g * x;
  return v;
}

}  // namespace cavityberry
