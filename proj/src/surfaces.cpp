#include "cavityberry/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

namespace cavityberry {

Grid::Grid(double x_min_, double x_max_, int nx_, double p_min_, double p_max_, int np_)
    : x_min(x_min_), x_max(x_max_), p_min(p_min_), p_max(p_max_), nx(nx_), np(np_) {
  if (!(x_min < x_max) || !(p_min < p_max))
    throw ValidationError("Grid: need x_min < x_max and p_min < p_max");
  if (nx < 2 || np < 2) throw ValidationError("Grid: need nx, np >= 2");
}

const RealMatrix& SurfaceGrid::sheet(const std::string& name) const {
  for (const auto& [sheet_name, values] : sheets)
    if (sheet_name == name) return values;
  throw ValidationError("SurfaceGrid: unknown sheet '" + name + "'");
}

namespace {

template <typename F>
RealMatrix evaluate(const Grid& grid, F&& f) {
  RealMatrix m(grid.nx, grid.np);
  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.np; ++j) m(i, j) = f(grid.x(i), grid.p(j));
  return m;
}

}  // namespace

SurfaceGrid jc_surfaces(double delta, double g, const Grid& grid) {
  SurfaceGrid s(grid);
  const auto root = [=](double x, double p) {
    return std::sqrt(0.25 * delta * delta + g * g * (x * x + p * p));
  };
  s.sheets.emplace_back("E_minus", evaluate(grid, [&](double x, double p) { return -root(x, p); }));
  s.sheets.emplace_back("E_plus", evaluate(grid, root));
  return s;
}

SurfaceGrid rabi_surfaces(double omega, double nu, double g, const Grid& grid) {
  SurfaceGrid s(grid);
  const auto harmonic = [=](double x, double p) { return 0.5 * omega * (x * x + p * p); };
  const auto root = [=](double x, double) {
    return std::sqrt(0.25 * nu * nu + 4.0 * g * g * x * x);
  };
  s.sheets.emplace_back("E_minus", evaluate(grid, [&](double x, double p) {
                          return harmonic(x, p) - root(x, p);
                        }));
  s.sheets.emplace_back("E_plus", evaluate(grid, [&](double x, double p) {
                          return harmonic(x, p) + root(x, p);
                        }));
  return s;
}

SurfaceGrid lambda_surfaces(const LambdaParams& params, double omega, const Grid& grid) {
  if (params.E1 != params.E2)
    throw ValidationError("lambda_surfaces: requires E1 = E2");
  const double delta = params.delta();
  const double drive = params.kappa * std::cos(params.chi);
  SurfaceGrid s(grid);
  const auto harmonic = [=](double x, double p) { return 0.5 * omega * (x * x + p * p); };
  const auto split = [=](double x) {
    return std::sqrt(delta * delta + drive * drive + 4.0 * params.g * params.g * x * x);
  };
  s.sheets.emplace_back("E_minus", evaluate(grid, [&](double x, double p) {
                          return harmonic(x, p) + 0.5 * (delta - split(x));
                        }));
  s.sheets.emplace_back("E_plus", evaluate(grid, [&](double x, double p) {
                          return harmonic(x, p) + 0.5 * (delta + split(x));
                        }));
  s.sheets.emplace_back("E_0", evaluate(grid, harmonic));
  return s;
}

std::string to_string(DegeneracyClass c) {
  switch (c) {
    case DegeneracyClass::point: return "point";
    case DegeneracyClass::line: return "line";
    case DegeneracyClass::none: return "none";
  }
  return "none";
}

namespace {

// Bilinear interpolation of a node field at an interior point.
double interpolate(const Grid& grid, const RealMatrix& f, double x, double p) {
  const double ti = (x - grid.x_min) / grid.dx();
  const double tj = (p - grid.p_min) / grid.dp();
  const int i0 = std::clamp(int(std::floor(ti)), 0, grid.nx - 2);
  const int j0 = std::clamp(int(std::floor(tj)), 0, grid.np - 2);
  const double u = std::clamp(ti - double(i0), 0.0, 1.0);
  const double v = std::clamp(tj - double(j0), 0.0, 1.0);
  return (1 - u) * (1 - v) * f(i0, j0) + u * (1 - v) * f(i0 + 1, j0) +
         (1 - u) * v * f(i0, j0 + 1) + u * v * f(i0 + 1, j0 + 1);
}

bool single_small_cluster(const std::vector<std::pair<int, int>>& nodes) {
  if (nodes.empty() || nodes.size() > 4) return false;
  // 8-connectivity flood fill from the first node.
  std::set<std::pair<int, int>> pending(nodes.begin() + 1, nodes.end());
  std::vector<std::pair<int, int>> frontier{nodes.front()};
  while (!frontier.empty()) {
    const auto [i, j] = frontier.back();
    frontier.pop_back();
    for (auto it = pending.begin(); it != pending.end();) {
      if (std::abs(it->first - i) <= 1 && std::abs(it->second - j) <= 1) {
        frontier.push_back(*it);
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
  }
  return pending.empty();
}

double fit_gap_exponent(const Grid& grid, const RealMatrix& gap, double cx, double cp) {
  const double h = std::min(grid.dx(), grid.dp());
  const int samples = 8;
  std::vector<double> slopes;
  for (int ray = 0; ray < 8; ++ray) {
    const double angle = 0.25 * M_PI * double(ray);
    std::vector<double> lr, lg;
    for (int m = 1; m <= samples; ++m) {
      const double r = double(m) * h;
      const double x = cx + r * std::cos(angle);
      const double p = cp + r * std::sin(angle);
      if (x < grid.x_min || x > grid.x_max || p < grid.p_min || p > grid.p_max) break;
      const double value = interpolate(grid, gap, x, p);
      if (!(value > 0.0) || !std::isfinite(value)) continue;
      lr.push_back(std::log(r));
      lg.push_back(std::log(value));
    }
    if (lr.size() < 3) continue;
    const double n = double(lr.size());
    double sr = 0, sg = 0, srr = 0, srg = 0;
    for (size_t k = 0; k < lr.size(); ++k) {
      sr += lr[k];
      sg += lg[k];
      srr += lr[k] * lr[k];
      srg += lr[k] * lg[k];
    }
    const double denom = n * srr - sr * sr;
    if (denom <= 0.0) continue;
    slopes.push_back((n * srg - sr * sg) / denom);
  }
  if (slopes.empty()) return std::numeric_limits<double>::quiet_NaN();
  double sum = 0;
  for (double s : slopes) sum += s;
  return sum / double(slopes.size());
}

}  // namespace

DegeneracyReport detect_degeneracy(const SurfaceGrid& surface, const std::string& sheet_a,
                                   const std::string& sheet_b, double tol) {
  if (!(tol > 0.0)) throw ValidationError("detect_degeneracy: tol must be > 0");
  if (surface.sheets.empty()) throw EmptyGrid("detect_degeneracy: surface has no sheets");
  const RealMatrix& a = surface.sheet(sheet_a);
  const RealMatrix& b = surface.sheet(sheet_b);
  const Grid& grid = surface.grid;
  if (a.size() == 0) throw EmptyGrid("detect_degeneracy: empty sheet");

  const RealMatrix gap = (a - b).cwiseAbs();
  DegeneracyReport report;
  report.min_gap = gap.minCoeff();

  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.np; ++j)
      if (gap(i, j) <= report.min_gap + tol) report.argmin_nodes.emplace_back(i, j);

  std::set<int> distinct_i, distinct_j;
  for (const auto& [i, j] : report.argmin_nodes) {
    distinct_i.insert(i);
    distinct_j.insert(j);
  }

  const bool closes = report.min_gap <= tol;
  const bool spans_line =
      double(distinct_i.size()) >= 0.8 * double(grid.nx) ||
      double(distinct_j.size()) >= 0.8 * double(grid.np);
  if (!closes) {
    report.classification = DegeneracyClass::none;
  } else if (spans_line) {
    report.classification = DegeneracyClass::line;
  } else if (single_small_cluster(report.argmin_nodes)) {
    report.classification = DegeneracyClass::point;
  } else {
    report.classification = DegeneracyClass::none;
  }

  double cx = 0, cp = 0;
  for (const auto& [i, j] : report.argmin_nodes) {
    cx += grid.x(i);
    cp += grid.p(j);
  }
  cx /= double(report.argmin_nodes.size());
  cp /= double(report.argmin_nodes.size());
  report.gap_scaling_exponent = fit_gap_exponent(grid, gap, cx, cp);
  return report;
}

BoSpinEigenstates bo_spin_eigenstates_rabi(double x, double p, PhaseAngle phi, double nu) {
  const double transverse = 2.0 * (std::cos(phi.value) * x - std::sin(phi.value) * p);
  if (nu == 0.0 && transverse == 0.0)
    throw UndefinedMixingAngle("bo_spin_eigenstates_rabi: nu = 0 with vanishing coupling");
  BoSpinEigenstates out;
  out.theta = std::atan2(transverse, nu);
  const double c = std::cos(0.5 * out.theta);
  const double s = std::sin(0.5 * out.theta);
  out.v_plus = Eigen::Vector2d(c, s);
  out.v_minus = Eigen::Vector2d(s, -c);
  return out;
}

RealGaugeConnection real_gauge_connection(double radius, const LoopSpec& loop, double nu,
                                          Branch branch) {
  if (radius < 0.0) throw ValidationError("real_gauge_connection: radius must be >= 0");
  if (nu == 0.0)
    throw UndefinedMixingAngle("real_gauge_connection: nu = 0 leaves the mixing angle undefined");

  std::vector<ComplexVector> family(loop.steps);
  for (int k = 0; k < loop.steps; ++k) {
    const double phi = loop.phi(k);
    const BoSpinEigenstates eig =
        bo_spin_eigenstates_rabi(radius * std::cos(phi), radius * std::sin(phi), phi, nu);
    const Eigen::Vector2d& v = branch == Branch::plus ? eig.v_plus : eig.v_minus;
    family[k] = v.cast<Complex>();
  }

  RealGaugeConnection out;
  out.increments.resize(loop.steps);
  for (int k = 0; k < loop.steps; ++k) {
    const Complex overlap = family[k].dot(family[(k + 1) % loop.steps]);
    out.increments[k] = overlap.imag();
    out.total += out.increments[k];
  }
  return out;
}

}  // namespace cavityberry
