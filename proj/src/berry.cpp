#include "cavityberry/berry.hpp"

#include "cavityberry/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace cavityberry {

BandSelector BandSelector::ordinal(int index) {
  if (index < 0) throw ValidationError("BandSelector: ordinal index must be >= 0");
  BandSelector s;
  s.by_ordinal = true;
  s.index = index;
  s.label = "ordinal:" + std::to_string(index);
  return s;
}

BandSelector BandSelector::nearest_eigenvalue(double target, std::string label) {
  BandSelector s;
  s.by_ordinal = false;
  s.target = target;
  s.label = std::move(label);
  return s;
}

double jc_band_eigenvalue(double delta, double g, int n, Branch branch) {
  if (n < 0) throw ValidationError("jc_band_eigenvalue: n must be >= 0");
  return branch_sign(branch) *
         std::sqrt(0.25 * delta * delta + 2.0 * g * g * double(n + 1));
}

BandSelector jc_band(const JCParams& params, int n, Branch branch) {
  std::ostringstream label;
  label << "jc:" << n << (branch == Branch::plus ? '+' : '-');
  return BandSelector::nearest_eigenvalue(
      jc_band_eigenvalue(params.delta(), params.g, n, branch), label.str());
}

namespace {

std::string with_phi(const char* what, double phi) {
  std::ostringstream os;
  os << what << " at phi = " << phi;
  return os.str();
}

int worker_count(const NumericSettings& settings) {
  if (settings.threads > 0) return settings.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

// Diagonalize a contiguous block of loop points on the worker pool.  Each
// slot is written by exactly one worker, so results are independent of
// scheduling.
void solve_block(const RotatedBuilder& builder, const LoopSpec& loop, int k0, int count,
                 int workers, const NumericSettings& settings,
                 std::vector<EigenDecomposition>& out, std::exception_ptr& error) {
  out.resize(count);
  std::mutex error_mutex;
  const auto work = [&](int w) {
    try {
      for (int i = w; i < count; i += workers)
        out[i] = hermitian_eig(builder(loop.phi(k0 + i)), settings);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (workers <= 1 || count <= 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();
}

double guarded_top_occupation(const ComplexVector& state, int n_trunc, int guard_levels) {
  const int first_guarded = std::max(0, n_trunc - guard_levels);
  double occ = 0.0;
  for (Eigen::Index i = 2 * Eigen::Index(first_guarded); i < state.size(); ++i)
    occ += std::norm(state(i));
  return occ;
}

void check_band_gap(const EigenDecomposition& d, int index, double phi,
                    const NumericSettings& settings) {
  const Eigen::Index n = d.values.size();
  if (n < 2) return;
  const double range = d.values(n - 1) - d.values(0);
  double gap = std::numeric_limits<double>::infinity();
  if (index > 0) gap = std::min(gap, d.values(index) - d.values(index - 1));
  if (index + 1 < n) gap = std::min(gap, d.values(index + 1) - d.values(index));
  if (gap <= settings.gap_floor_rel * range)
    throw DegenerateBand(with_phi("band gap below floor", phi));
}

int select_initial_band(const EigenDecomposition& d, const BandSelector& band) {
  if (band.by_ordinal) {
    if (band.index >= d.values.size())
      throw ValidationError("BandSelector: ordinal index out of range");
    return band.index;
  }
  Eigen::Index best = 0;
  double best_dist = std::abs(d.values(0) - band.target);
  for (Eigen::Index j = 1; j < d.values.size(); ++j) {
    const double dist = std::abs(d.values(j) - band.target);
    if (dist < best_dist) {
      best_dist = dist;
      best = j;
    }
  }
  return int(best);
}

// Index of the eigenvector with maximal overlap against `previous`; enforces
// the ambiguity margin between the two leading candidates.
int track_step(const EigenDecomposition& d, const ComplexVector& previous, double phi,
               const NumericSettings& settings, double& best_overlap) {
  const ComplexVector overlaps = d.vectors.adjoint() * previous;
  int best = 0;
  double mbest = -1.0, msecond = -1.0;
  for (Eigen::Index j = 0; j < overlaps.size(); ++j) {
    const double m = std::abs(overlaps(j));
    if (m > mbest) {
      msecond = mbest;
      mbest = m;
      best = int(j);
    } else if (m > msecond) {
      msecond = m;
    }
  }
  if (overlaps.size() > 1 && mbest - msecond < settings.ambiguity_gap)
    throw BandTrackingAmbiguity(with_phi("tracking candidates too close", phi));
  if (mbest < settings.overlap_floor)
    throw BandTrackingAmbiguity(with_phi("tracking overlap below floor", phi));
  best_overlap = mbest;
  return best;
}

}  // namespace

StateFamily eigenstate_family(const RotatedBuilder& builder, const LoopSpec& loop,
                              const BandSelector& band, int n_trunc,
                              const NumericSettings& settings) {
  if (n_trunc < 2) throw ValidationError("eigenstate_family: n_trunc must be >= 2");

  StateFamily family;
  family.band_label = band.label;
  family.n_trunc = n_trunc;
  family.states.reserve(loop.steps);

  const int workers = worker_count(settings);
  const int block = std::max(4 * workers, 16);

  int tracked = -1;
  for (int k0 = 0; k0 < loop.steps; k0 += block) {
    const int count = std::min(block, loop.steps - k0);
    std::vector<EigenDecomposition> decomps;
    std::exception_ptr error;
    solve_block(builder, loop, k0, count, workers, settings, decomps, error);
    if (error) std::rethrow_exception(error);

    for (int i = 0; i < count; ++i) {
      const int k = k0 + i;
      const EigenDecomposition& d = decomps[i];
      if (d.vectors.rows() != 2 * Eigen::Index(n_trunc))
        throw ValidationError("eigenstate_family: builder dimension is not 2 n_trunc");
      if (k == 0) {
        tracked = select_initial_band(d, band);
      } else {
        double ov = 0.0;
        tracked = track_step(d, family.states.back(), loop.phi(k), settings, ov);
        family.min_overlap = std::min(family.min_overlap, ov);
      }
      check_band_gap(d, tracked, loop.phi(k), settings);
      family.states.push_back(d.vectors.col(tracked));
      const double occ = guarded_top_occupation(family.states.back(), n_trunc,
                                                settings.guard_levels);
      family.top_occupation = std::max(family.top_occupation, occ);
      if (occ > settings.truncation_guard)
        throw TruncationLeak(with_phi("top Fock levels occupied", loop.phi(k)));
    }
  }

  // Closure of the loop: the last step must return to the starting ray.
  const double wrap = std::abs(family.states.back().dot(family.states.front()));
  family.min_overlap = std::min(family.min_overlap, wrap);
  if (wrap < settings.overlap_floor)
    throw BandTrackingAmbiguity(with_phi("loop closure overlap below floor", 2.0 * M_PI));
  return family;
}

BerryPhaseResult wilson_loop_phase(const StateFamily& family, const NumericSettings& settings) {
  const int k_steps = int(family.states.size());
  if (k_steps < 2) throw ValidationError("wilson_loop_phase: family too short");

  Complex product(1.0, 0.0);
  double raw = 0.0;
  for (int k = 0; k < k_steps; ++k) {
    const ComplexVector& a = family.states[k];
    const ComplexVector& b = family.states[(k + 1) % k_steps];
    const Complex overlap = a.dot(b);  // conjugates a
    const double modulus = std::abs(overlap);
    if (modulus < settings.zero_overlap_tol)
      throw ZeroOverlap(with_phi("overlap modulus below guard",
                                 2.0 * M_PI * double(k) / double(k_steps)));
    product *= overlap / modulus;
    raw -= std::arg(overlap);
  }

  BerryPhaseResult result;
  result.gamma = principal_angle(-std::arg(product));
  result.raw_sum = raw;
  result.steps = k_steps;
  result.n_trunc = family.n_trunc;
  result.min_overlap = family.min_overlap;
  result.top_occupation = family.top_occupation;
  return result;
}

double jc_analytic_phase(double delta, double g, int n, Branch branch) {
  if (n < 0) throw ValidationError("jc_analytic_phase: n must be >= 0");
  if (delta == 0.0 && g == 0.0)
    throw DegenerateParameters("jc_analytic_phase: delta = g = 0");
  const double root = std::sqrt(0.25 * delta * delta + 2.0 * g * g * double(n + 1));
  return principal_angle(branch_sign(branch) * M_PI * (1.0 - 0.5 * delta / root));
}

double ci_encircle_phase(double delta, double g, double radius, Branch branch) {
  if (radius < 0.0) throw ValidationError("ci_encircle_phase: radius must be >= 0");
  const double s = g * radius;
  if (delta == 0.0 && s == 0.0)
    throw DegenerateParameters("ci_encircle_phase: delta = 0 and g R = 0");
  const double root = std::sqrt(0.25 * delta * delta + s * s);
  return principal_angle(branch_sign(branch) * M_PI * (1.0 - 0.5 * delta / root));
}

double jt_encircle_phase(double nu, double g, double radius, Branch branch) {
  if (radius < 0.0) throw ValidationError("jt_encircle_phase: radius must be >= 0");
  const double s = g * radius;
  if (nu == 0.0 && s == 0.0)
    throw DegenerateParameters("jt_encircle_phase: nu = 0 and g R = 0");
  const double root = std::sqrt(nu * nu + 4.0 * s * s);
  return principal_angle(branch_sign(branch) * M_PI * (1.0 - nu / root));
}

double number_expectation_phase(const ComplexVector& state) {
  if (state.size() < 2 || state.size() % 2 != 0)
    throw ValidationError("number_expectation_phase: composite state dimension must be even");
  const double norm = state.squaredNorm();
  if (std::abs(norm - 1.0) > 1e-10)
    throw ValidationError("number_expectation_phase: state is not normalized");
  double expectation = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i)
    expectation += double(i / 2) * std::norm(state(i));
  return principal_angle(2.0 * M_PI * expectation);
}

double mod2pi_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * M_PI));
}

double principal_angle(double angle) {
  double r = std::remainder(angle, 2.0 * M_PI);
  if (r <= -M_PI) r = M_PI;  // land on the (-pi, pi] representative
  return r;
}

}  // namespace cavityberry
