#pragma once

#include "cavityberry/berry.hpp"
#include "cavityberry/hamiltonians.hpp"
#include "cavityberry/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cavityberry {

/// Uniform rectangular grid over the (x, p) plane.
/// Node (i, j) sits at (x_min + i dx, p_min + j dp).
struct Grid {
  Grid(double x_min, double x_max, int nx, double p_min, double p_max, int np);
  double x(int i) const { return x_min + double(i) * dx(); }
  double p(int j) const { return p_min + double(j) * dp(); }
  double dx() const { return (x_max - x_min) / double(nx - 1); }
  double dp() const { return (p_max - p_min) / double(np - 1); }
  double x_min, x_max, p_min, p_max;
  int nx, np;
};

/// Named energy sheets sampled on a grid; sheet matrices are nx-by-np and
/// kept in export order (E_minus, E_plus, then E_0 when present).
struct SurfaceGrid {
  explicit SurfaceGrid(const Grid& g) : grid(g) {}
  Grid grid;
  std::vector<std::pair<std::string, RealMatrix>> sheets;
  const RealMatrix& sheet(const std::string& name) const;
};

// Born-Oppenheimer sheets of the JC model, E = +/- sqrt(delta^2/4 + g^2 r^2):
// a double cone through the origin on resonance.
SurfaceGrid jc_surfaces(double delta, double g, const Grid& grid);

// Rabi sheets, E = omega r^2/2 +/- sqrt(nu^2/4 + 4 g^2 x^2); the splitting
// depends on x only, so the gap minimum always sits on the x = 0 line.
SurfaceGrid rabi_surfaces(double omega, double nu, double g, const Grid& grid);

// Lambda-atom sheets at fixed drive angle chi (requires E1 = E2):
//   E_pm = omega r^2/2 + (delta +/- sqrt(delta^2 + G^2))/2,  E_0 = omega r^2/2,
// with delta = E3 - E1 and G^2 = kappa^2 cos^2(chi) + 4 g^2 x^2.
SurfaceGrid lambda_surfaces(const LambdaParams& params, double omega, const Grid& grid);

enum class DegeneracyClass { point, line, none };

std::string to_string(DegeneracyClass c);

struct DegeneracyReport {
  double min_gap = 0.0;
  std::vector<std::pair<int, int>> argmin_nodes;  // (i, j), row-major order
  DegeneracyClass classification = DegeneracyClass::none;
  double gap_scaling_exponent = 0.0;  // NaN when no ray fit is possible
};

// Locates the minimum of |sheet_a - sheet_b| over the grid and classifies its
// geometry.  The argmin set collects every node within tol of the minimum;
// the same tol decides whether the gap closes at all:
//   min_gap > tol                                  -> none
//   argmin spans >= 80% of one grid dimension      -> line
//   argmin is one connected cluster of <= 4 nodes  -> point
// The exponent alpha comes from fitting gap ~ r^alpha along 8 rays out of the
// argmin centroid; alpha near 1 signals a conical contact.
DegeneracyReport detect_degeneracy(const SurfaceGrid& surface, const std::string& sheet_a,
                                   const std::string& sheet_b, double tol);

// Real-gauge spin eigenstates of the semiclassical Rabi Hamiltonian with
// mixing angle tan(theta) = 2 (cos(phi) x - sin(phi) p)/nu.  Components are
// ordered (excited |2>, ground |1>) as in the dressed-state form
// |+> = cos(theta/2)|2> + sin(theta/2)|1>, |-> = sin(theta/2)|2> - cos(theta/2)|1>.
struct BoSpinEigenstates {
  double theta = 0.0;
  Eigen::Vector2d v_plus;
  Eigen::Vector2d v_minus;
};

BoSpinEigenstates bo_spin_eigenstates_rabi(double x, double p, PhaseAngle phi, double nu);

/// Discrete connection increments Im <Theta(phi_k)|Theta(phi_{k+1})> of the
/// real-gauge Rabi family on the circle (x, p) = R (cos phi_k, sin phi_k).
struct RealGaugeConnection {
  std::vector<double> increments;  // one per step, wrap included
  double total = 0.0;
};

RealGaugeConnection real_gauge_connection(double radius, const LoopSpec& loop, double nu,
                                          Branch branch);

}  // namespace cavityberry
