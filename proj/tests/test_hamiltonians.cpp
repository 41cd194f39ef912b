#include "cavityberry/hamiltonians.hpp"

#include "cavityberry/eigensolve.hpp"
#include "cavityberry/fock_algebra.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace cavityberry;
using test::max_abs;
using test::max_abs_diff;

namespace {

// 2x2 dressed block of the JC Hamiltonian spanned by {|n,2>, |n+1,1>}
// (composite indices 2n+1 and 2n+2).
ComplexMatrix jc_block(const ComplexMatrix& h, int n) {
  ComplexMatrix block(2, 2);
  const int i = 2 * n + 1, j = 2 * n + 2;
  block << h(i, i), h(i, j), h(j, i), h(j, j);
  return block;
}

}  // namespace

TEST_CASE("build_jc structure") {
  const TruncationDim dim(6);

  SUBCASE("decoupled limit is diagonal +/- delta/2") {
    const JCParams p{1.0, 3.5, 0.0};
    const ComplexMatrix h = build_jc(p, dim);
    CHECK(max_abs_diff(h, 0.5 * p.delta() * kron(identity(6), pauli(PauliAxis::z))) == 0.0);
  }

  SUBCASE("dressed block eigenvalues +/- sqrt(delta^2/4 + 2 g^2 (n+1))") {
    const JCParams p{1.0, 2.7, 0.6};
    const ComplexMatrix h = build_jc(p, dim);
    for (int n = 0; n < 4; ++n) {
      const ComplexMatrix block = jc_block(h, n);
      // By hand: eigenvalues of [[d/2, c],[c, -d/2]] are +/- sqrt(d^2/4 + c^2)
      // with c = g sqrt(2 (n+1)).
      const double expected =
          std::sqrt(0.25 * p.delta() * p.delta() + 2.0 * p.g * p.g * (n + 1));
      const EigenDecomposition d = hermitian_eig(block);
      CHECK(d.values(0) == doctest::Approx(-expected).epsilon(1e-12));
      CHECK(d.values(1) == doctest::Approx(expected).epsilon(1e-12));
    }
  }

  SUBCASE("resonant vacuum block gives +/- sqrt(2)") {
    const JCParams p{1.0, 1.0, 1.0};
    const EigenDecomposition d = hermitian_eig(jc_block(build_jc(p, dim), 0));
    CHECK(d.values(0) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(d.values(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }

  SUBCASE("quadrature spin-orbit form reproduces the Hamiltonian") {
    const JCParams p{1.0, 1.9, 0.3};
    const ComplexMatrix via_quadratures =
        0.5 * p.delta() * kron(identity(6), pauli(PauliAxis::z)) +
        p.g * (kron(quadrature_x(dim), pauli(PauliAxis::x)) +
               kron(quadrature_p(dim), pauli(PauliAxis::y)));
    CHECK(max_abs_diff(build_jc(p, dim), via_quadratures) < 1e-14);
  }

  SUBCASE("conserves the excitation number") {
    const JCParams p{1.0, 1.4, 0.8};
    const ComplexMatrix h = build_jc(p, dim);
    const ComplexMatrix excitation =
        kron(number(dim), identity(2)) +
        0.5 * kron(identity(6), (pauli(PauliAxis::z) + identity(2)).eval());
    CHECK(max_abs(h * excitation - excitation * h) < 1e-12);
  }
}

TEST_CASE("build_jc_rotated") {
  const TruncationDim dim(8);
  const JCParams p{1.0, 1.6, 0.4};

  SUBCASE("phi = 0 is the unrotated Hamiltonian") {
    CHECK(max_abs_diff(build_jc_rotated(p, PhaseAngle(0.0), dim), build_jc(p, dim)) == 0.0);
  }

  SUBCASE("equals conjugation by the phase rotation") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 10; ++trial) {
      const double phi = angle(rng);
      const ComplexMatrix u = phase_rotation_operator(PhaseAngle(phi), dim);
      const ComplexMatrix conjugated = u * build_jc(p, dim) * u.adjoint();
      CHECK(max_abs_diff(build_jc_rotated(p, PhaseAngle(phi), dim), conjugated) < 1e-12);
    }
  }

  SUBCASE("phi = pi flips the coupling sign") {
    const JCParams resonant{1.0, 1.0, 1.0};
    const ComplexMatrix h0 = build_jc(resonant, TruncationDim(2));
    const ComplexMatrix hpi = build_jc_rotated(resonant, PhaseAngle(M_PI), TruncationDim(2));
    CHECK(max_abs_diff(hpi, (-h0).eval()) < 1e-14);  // delta = 0, pure coupling
  }

  SUBCASE("spectrum is phi-independent") {
    const RealVector base = hermitian_eig(build_jc(p, dim)).values;
    for (double phi : {0.7, 1.3, 4.4}) {
      const RealVector rotated = hermitian_eig(build_jc_rotated(p, PhaseAngle(phi), dim)).values;
      CHECK((base - rotated).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("build_rabi") {
  const TruncationDim dim(40);
  const RabiParams p{1.0, 0.8, 0.3};

  SUBCASE("real-symmetric representation") {
    const ComplexMatrix h = build_rabi(p, dim);
    CHECK(h.imag().cwiseAbs().maxCoeff() == 0.0);
    CHECK(max_abs_diff(h, h.adjoint()) == 0.0);
  }

  SUBCASE("decoupled limit: harmonic ladder +/- nu/2 away from the edge") {
    const RabiParams free{1.0, 0.8, 0.0};
    const RealVector values = hermitian_eig(build_rabi(free, dim)).values;
    std::vector<double> expected;
    for (int n = 0; n + 2 < dim.n_max; ++n) {
      expected.push_back(free.omega * (n + 0.5) - 0.5 * free.nu);
      expected.push_back(free.omega * (n + 0.5) + 0.5 * free.nu);
    }
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < 20; ++k)
      CHECK(values(k) == doctest::Approx(expected[k]).epsilon(1e-12));
  }

  SUBCASE("commutes with the parity operator") {
    ComplexMatrix signs = ComplexMatrix::Zero(dim.n_max, dim.n_max);
    for (int n = 0; n < dim.n_max; ++n) signs(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    const ComplexMatrix parity = kron(signs, pauli(PauliAxis::z));
    const ComplexMatrix h = build_rabi(p, dim);
    CHECK(max_abs(h * parity - parity * h) < 1e-12);
  }
}

TEST_CASE("build_rabi_rotated") {
  const TruncationDim dim(24);
  const RabiParams p{1.0, 0.9, 0.35};

  SUBCASE("phi = 0 is the unrotated Hamiltonian") {
    CHECK(max_abs_diff(build_rabi_rotated(p, PhaseAngle(0.0), dim), build_rabi(p, dim)) == 0.0);
  }

  SUBCASE("equals conjugation by the phase rotation") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 10; ++trial) {
      const double phi = angle(rng);
      const ComplexMatrix u = phase_rotation_operator(PhaseAngle(phi), dim);
      const ComplexMatrix conjugated = u * build_rabi(p, dim) * u.adjoint();
      CHECK(max_abs_diff(build_rabi_rotated(p, PhaseAngle(phi), dim), conjugated) < 1e-12);
    }
  }

  SUBCASE("quarter-turn coupling is along the p quadrature") {
    const ComplexMatrix h = build_rabi_rotated(p, PhaseAngle(0.5 * M_PI), dim);
    const ComplexMatrix free =
        0.5 * p.omega *
            kron((quadrature_p(dim) * quadrature_p(dim) + quadrature_x(dim) * quadrature_x(dim))
                     .eval(),
                 identity(2)) +
        0.5 * p.nu * kron(identity(dim.n_max), pauli(PauliAxis::z));
    const ComplexMatrix coupling = 2.0 * p.g * kron(quadrature_p(dim), pauli(PauliAxis::x));
    CHECK(max_abs_diff(h, free + coupling) < 1e-12);
  }

  SUBCASE("sorted spectrum matches phi = 0 at phi = 1.3") {
    const RealVector base = hermitian_eig(build_rabi(p, dim)).values;
    const RealVector rotated =
        hermitian_eig(build_rabi_rotated(p, PhaseAngle(1.3), dim)).values;
    CHECK((base - rotated).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("phase_rotation_operator") {
  const TruncationDim dim(7);
  CHECK(max_abs_diff(phase_rotation_operator(PhaseAngle(0.0), dim), identity(14)) == 0.0);
  CHECK(max_abs_diff(phase_rotation_operator(PhaseAngle(2.0 * M_PI), dim), identity(14)) == 0.0);
  const ComplexMatrix u = phase_rotation_operator(PhaseAngle(1.234), dim);
  CHECK(max_abs_diff(u * u.adjoint(), identity(14)) < 1e-14);
}

TEST_CASE("effective_field") {
  SUBCASE("jc reads off the spin-orbit coefficients") {
    const JCParams p{1.0, 4.0, 0.7};  // delta = 3
    const EffectiveField b = effective_field(p, 1.0, 2.0, PhaseAngle(0.0));
    CHECK(b.bx == doctest::Approx(p.g * 1.0));
    CHECK(b.by == doctest::Approx(p.g * 2.0));
    CHECK(b.bz == doctest::Approx(1.5));
    CHECK(b.scalar == 0.0);
  }

  SUBCASE("jc field magnitude is rotation invariant") {
    const JCParams p{1.0, 1.5, 0.4};
    const EffectiveField b0 = effective_field(p, 0.7, -1.1, PhaseAngle(0.0));
    const EffectiveField b1 = effective_field(p, 0.7, -1.1, PhaseAngle(2.1));
    const double m0 = std::hypot(b0.bx, b0.by);
    const double m1 = std::hypot(b1.bx, b1.by);
    CHECK(m0 == doctest::Approx(m1).epsilon(1e-12));
  }

  SUBCASE("rabi field never leaves the y = 0 plane") {
    const RabiParams p{1.0, 2.0, 0.9};
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 1000; ++trial) {
      const EffectiveField b = effective_field(p, coord(rng), coord(rng), PhaseAngle(angle(rng)));
      CHECK(b.by == 0.0);
    }
  }

  SUBCASE("rabi coefficients at phi = 0") {
    const RabiParams p{1.0, 2.0, 0.9};
    const EffectiveField b = effective_field(p, 1.0, 0.0, PhaseAngle(0.0));
    CHECK(b.bx == doctest::Approx(2.0 * p.g));
    CHECK(b.by == 0.0);
    CHECK(b.bz == doctest::Approx(1.0));
    CHECK(b.scalar == doctest::Approx(0.5 * p.omega));
  }
}

TEST_CASE("build_lambda_potential_matrix") {
  SUBCASE("bare limit is diagonal") {
    const LambdaParams p{0.3, 0.3, 1.7, 0.0, 0.0, 0.0};
    const ComplexMatrix v = build_lambda_potential_matrix(p, 2.0);
    ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
    expected(0, 0) = 0.3;
    expected(1, 1) = 0.3;
    expected(2, 2) = 1.7;
    CHECK(max_abs_diff(v, expected) == 0.0);
  }

  SUBCASE("quarter-phase drive decouples the classical branch") {
    const LambdaParams p{0.0, 0.0, 1.0, 2.0, 1.0, 0.5 * M_PI};
    const ComplexMatrix v = build_lambda_potential_matrix(p, 1.0);
    CHECK(std::abs(v(0, 2)) < 1e-15);
    CHECK(v(1, 2).real() == doctest::Approx(2.0));
  }

  SUBCASE("eigenvalues from the characteristic polynomial") {
    // E1 = E2 = 0, E3 = delta, kappa = g = x = 1, chi = 0: the invariant
    // vector (b, -a, 0) carries eigenvalue 0 and the remaining 2x2 block
    // [[0, sqrt(5)], [sqrt(5), delta]] gives (delta +/- sqrt(delta^2 + 20))/2.
    const double delta = 0.7;
    const LambdaParams p{0.0, 0.0, delta, 1.0, 1.0, 0.0};
    const RealVector values = hermitian_eig(build_lambda_potential_matrix(p, 1.0)).values;
    std::vector<double> expected{0.5 * (delta - std::sqrt(delta * delta + 20.0)), 0.0,
                                 0.5 * (delta + std::sqrt(delta * delta + 20.0))};
    for (int k = 0; k < 3; ++k)
      CHECK(values(k) == doctest::Approx(expected[k]).epsilon(1e-12));
  }
}

TEST_CASE("builders are Hermitian") {
  const TruncationDim dim(12);
  const JCParams jc{1.0, 1.7, 0.5};
  const RabiParams rabi{1.0, 0.6, 0.45};
  for (double phi : {0.0, 0.9, 2.6}) {
    CHECK(max_abs_diff(build_jc_rotated(jc, PhaseAngle(phi), dim),
                       build_jc_rotated(jc, PhaseAngle(phi), dim).adjoint()) < 1e-12);
    CHECK(max_abs_diff(build_rabi_rotated(rabi, PhaseAngle(phi), dim),
                       build_rabi_rotated(rabi, PhaseAngle(phi), dim).adjoint()) < 1e-12);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_jc(JCParams{1.0, 1.0, -0.1}, TruncationDim(4)), ValidationError);
  CHECK_THROWS_AS(build_rabi(RabiParams{0.0, 1.0, 0.1}, TruncationDim(4)), ValidationError);
  CHECK_THROWS_AS(build_rabi(RabiParams{-1.0, 1.0, 0.1}, TruncationDim(4)), ValidationError);
}
