#include "cavityberry/fock_algebra.hpp"

#include <cmath>

namespace cavityberry {

const NumericSettings& default_settings() {
  static const NumericSettings settings{};
  return settings;
}

PhaseAngle::PhaseAngle(double radians) {
  constexpr double two_pi = 2.0 * M_PI;
  value = std::fmod(radians, two_pi);
  if (value < 0.0) value += two_pi;
}

ComplexMatrix annihilation(TruncationDim N) {
  ComplexMatrix a = ComplexMatrix::Zero(N.n_max, N.n_max);
  for (int n = 1; n < N.n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

ComplexMatrix creation(TruncationDim N) { return annihilation(N).adjoint(); }

ComplexMatrix number(TruncationDim N) {
  ComplexMatrix n = ComplexMatrix::Zero(N.n_max, N.n_max);
  for (int k = 0; k < N.n_max; ++k) n(k, k) = double(k);
  return n;
}

ComplexMatrix quadrature_x(TruncationDim N) {
  const ComplexMatrix a = annihilation(N);
  return (a + a.adjoint()) / std::sqrt(2.0);
}

ComplexMatrix quadrature_p(TruncationDim N) {
  const ComplexMatrix a = annihilation(N);
  return Complex(0.0, 1.0) * (a - a.adjoint()) / std::sqrt(2.0);
}

ComplexMatrix pauli(PauliAxis axis) {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  switch (axis) {
    case PauliAxis::x:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case PauliAxis::y:
      s(0, 1) = Complex(0.0, 1.0);
      s(1, 0) = Complex(0.0, -1.0);
      break;
    case PauliAxis::z:
      s(0, 0) = -1.0;
      s(1, 1) = 1.0;
      break;
  }
  return s;
}

ComplexMatrix sigma_plus() {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(1, 0) = 1.0;
  return s;
}

ComplexMatrix sigma_minus() {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() == 0 || b.rows() == 0)
    throw ValidationError("kron: factors must be non-empty");
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix identity(int dim) {
  if (dim < 1) throw ValidationError("identity: dim must be positive");
  return ComplexMatrix::Identity(dim, dim);
}

}  // namespace cavityberry
