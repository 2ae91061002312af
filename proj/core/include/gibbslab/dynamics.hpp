#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gibbslab/model.hpp"
#include "gibbslab/weights.hpp"

namespace gibbslab {

enum class Scheme { tamed_euler };

struct IntegratorConfig {
  double dt = 1e-3;
  double horizon = 1.0;  // T
  Scheme scheme = Scheme::tamed_euler;
  double noise_scale = 1.0;  // 1, or 0 for deterministic tests
  std::uint64_t seed = 0;
  int workers = 1;
  // Times at which states are recorded; empty means {horizon}.
  std::vector<double> record_times;
};

// Seeded Monte Carlo paths of dX = sqrt(2) dB - grad U dt on a finite box,
// boundary frozen. States are recorded at the requested times only; layout is
// sample-major, then time, then site (Box enumeration order).
class TrajectoryEnsemble {
 public:
  TrajectoryEnsemble(Box box, std::vector<double> record_times, std::size_t samples,
                     std::uint64_t seed);

  const Box& box() const { return box_; }
  const std::vector<double>& record_times() const { return times_; }
  std::size_t samples() const { return samples_; }
  std::uint64_t seed() const { return seed_; }

  std::span<double> state(std::size_t sample, std::size_t time_idx);
  std::span<const double> state(std::size_t sample, std::size_t time_idx) const;

  // Convenience: one site's value at one recorded time, for every sample.
  std::vector<double> site_series(std::size_t time_idx, std::size_t site_idx) const;

  bool operator==(const TrajectoryEnsemble& o) const {
    return data_ == o.data_ && times_ == o.times_;
  }

 private:
  Box box_;
  std::vector<double> times_;
  std::size_t samples_;
  std::uint64_t seed_;
  std::vector<double> data_;
};

TrajectoryEnsemble simulate(const GibbsSpec& spec, const Configuration& init,
                            const IntegratorConfig& cfg, std::size_t samples);

struct CouplingEstimate {
  double discrepancy = 0.0;  // E[ sum_i alpha(i) sup_{grid} (X^L - X^M)_i^2 ]
  double std_error = 0.0;
};

// Common-noise coupling of the diffusions in nested boxes L c M, identical
// model, boundary 0; X^L is extended by the boundary value outside L. The sup
// is over the discrete time grid.
CouplingEstimate coupled_discrepancy(const GibbsSpec& spec_inner, const GibbsSpec& spec_outer,
                                     const Configuration& init, double t,
                                     const WeightTable& table, const IntegratorConfig& cfg,
                                     std::size_t samples);

struct CouplingPoint {
  double t = 0.0;
  double box_n = 0.0;  // inner box radius n
  double discrepancy = 0.0;
};

struct CouplingFit {
  double k_prime = 0.0;        // slope in t
  double d_alpha_prime = 0.0;  // decay rate in n (positive when decaying)
  double log_c = 0.0;          // intercept, inflated so the bound holds pointwise
  double max_residual = 0.0;
  bool bound_holds_pointwise = false;
};

// Least squares of log discrepancy against (t, n):
// log D = log c + k' t - d'_alpha n. Zero/negative discrepancies are a
// degenerate-data signal (fit_error).
CouplingFit fit_coupling_constants(std::span<const CouplingPoint> points);

// Bounded (or coordinate) observables drawn from a registry:
//   "coord:<k>"  sigma at site (k, 0, ...), unbounded (osc = inf)
//   "tanh:<k>"   tanh of that coordinate, osc = 2
//   "const:<c>"  constant c, osc = 0
struct TestFunction {
  std::string name;
  double osc = std::numeric_limits<double>::infinity();
  std::function<double(std::span<const double>, const Box&)> eval;
};

TestFunction make_test_function(const std::string& name);

struct SemigroupEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

// Monte Carlo estimate of P_t^L f(init).
SemigroupEstimate semigroup_estimate(const GibbsSpec& spec, const TestFunction& f,
                                     const Configuration& init, double t,
                                     const IntegratorConfig& cfg, std::size_t samples);

// n(t) = floor(rho t) + 1, the box-growth schedule; n(t) lies in [rho t, rho t + 1].
int n_of_t(double rho, double t);

struct UniquenessRow {
  double t = 0.0;
  int box_n = 0;
  std::vector<double> estimates;   // one per initial condition
  std::vector<double> std_errors;
  double max_gap = 0.0;
  double gap_std_error = 0.0;  // combined std error of the extremal pair
};

// For each t: runs the box L_{n(t)} semigroup from every initial condition
// and reports the max pairwise gap (boundary fixed to 0).
std::vector<UniquenessRow> uniqueness_demo(const ModelSpec& model, double rho,
                                           std::span<const double> t_grid, const TestFunction& f,
                                           std::span<const Configuration> inits,
                                           const IntegratorConfig& cfg, std::size_t samples);

}  // namespace gibbslab
