#pragma once

#include "cavityberry/types.hpp"

#include <random>

namespace cavityberry::test {

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline ComplexMatrix random_complex(int rows, int cols, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(nd(rng), nd(rng));
  return m;
}

inline ComplexMatrix random_hermitian(int dim, std::mt19937& rng) {
  const ComplexMatrix a = random_complex(dim, dim, rng);
  return 0.5 * (a + a.adjoint()).eval();
}

}  // namespace cavityberry::test
