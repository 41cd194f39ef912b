#pragma once

#include "cavityberry/types.hpp"

#include <utility>

namespace cavityberry {

/// Full orthonormal eigendecomposition of a Hermitian matrix.
/// values are ascending; column j of vectors pairs with values(j).
struct EigenDecomposition {
  RealVector values;
  ComplexMatrix vectors;
};

// Dense Hermitian eigendecomposition (tridiagonal reduction + implicit-shift
// iteration).  The input must be Hermitian to settings.hermiticity_tol in
// max-entry norm, else NonHermitianInput is thrown; ConvergenceFailure
// signals an exhausted iteration cap.
//
// Each eigenvector is re-phased so its largest-magnitude component is real
// and positive (ties broken by lowest index), which makes repeated runs and
// overlap diagnostics reproducible.  No attempt is made to orient vectors
// inside degenerate subspaces.
EigenDecomposition hermitian_eig(const ComplexMatrix& h,
                                 const NumericSettings& settings = default_settings());

/// Smallest eigenpair of a Hermitian matrix, same conventions as hermitian_eig.
std::pair<double, ComplexVector> ground_state(const ComplexMatrix& h,
                                              const NumericSettings& settings = default_settings());

}  // namespace cavityberry
