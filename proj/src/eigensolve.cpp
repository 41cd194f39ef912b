#include "cavityberry/eigensolve.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace cavityberry {

namespace {

void check_hermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols())
    throw ValidationError("hermitian_eig: matrix must be square");
  if (h.rows() == 0) throw ValidationError("hermitian_eig: matrix is empty");
  if (!h.allFinite())
    throw ValidationError("hermitian_eig: matrix has non-finite entries");
  const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw NonHermitianInput("hermitian_eig: max |H - H^dag| entry " +
                            std::to_string(dev) + " exceeds tolerance");
}

// Largest-magnitude component made real and positive, lowest index wins ties.
void apply_phase_convention(ComplexMatrix& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      const double m = std::abs(vectors(i, j));
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    if (best > 0.0) {
      const Complex c = vectors(imax, j) / best;
      vectors.col(j) *= std::conj(c);
    }
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& h, const NumericSettings& settings) {
  check_hermitian(h, settings.hermiticity_tol);
  // Symmetrize so the decomposition is of an exactly Hermitian operator.
  const ComplexMatrix hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hs);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("hermitian_eig: iteration cap exhausted");
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  apply_phase_convention(out.vectors);
  return out;
}

std::pair<double, ComplexVector> ground_state(const ComplexMatrix& h,
                                              const NumericSettings& settings) {
  const EigenDecomposition d = hermitian_eig(h, settings);
  return {d.values(0), d.vectors.col(0)};
}

}  // namespace cavityberry
