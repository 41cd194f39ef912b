#pragma once

#include "cavityberry/types.hpp"

namespace cavityberry {

// Truncated bosonic ladder algebra and two-level (spin) operators.
//
// Conventions used throughout the library:
//  - Fock basis |0>, ..., |n_max-1>;  <n-1| a |n> = sqrt(n).
//  - Quadratures follow a = (x - i p)/sqrt(2), i.e. x = (a + a^dag)/sqrt(2)
//    and p = i (a - a^dag)/sqrt(2).  This pairing makes the spin-orbit form
//    g (x sx + p sy) identical, as an operator, to the excitation-conserving
//    coupling g sqrt(2) (a^dag s- + s+ a); on the truncated interior the
//    commutator is [x, p] = -i.
//  - Atomic basis ordered (|1> ground, |2> excited): sz = diag(-1, +1),
//    s+ = (sx + i sy)/2 maps |1> -> |2>.
//  - Composite index for kron(field, spin) is field-major: i = 2 n + s with
//    s = 0 for |1> and s = 1 for |2>.

ComplexMatrix annihilation(TruncationDim N);
ComplexMatrix creation(TruncationDim N);
ComplexMatrix number(TruncationDim N);
ComplexMatrix quadrature_x(TruncationDim N);
ComplexMatrix quadrature_p(TruncationDim N);

enum class PauliAxis { x, y, z };

ComplexMatrix pauli(PauliAxis axis);
ComplexMatrix sigma_plus();
ComplexMatrix sigma_minus();

/// Tensor product with the field-major index convention above.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix identity(int dim);

}  // namespace cavityberry
