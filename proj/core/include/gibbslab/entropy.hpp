#pragma once

#include <map>
#include <span>
#include <vector>

#include "gibbslab/density.hpp"
#include "gibbslab/dynamics.hpp"
#include "gibbslab/model.hpp"

namespace gibbslab {

// Histogram entropy estimate against an exact single-site reference.
// Bins are equal-mass under the reference, count ~ samples^(1/3); the
// declared bias budget covers the chi-square inflation, its fluctuation and
// the equal-mass binning error.
struct EntropyRecord {
  double t = 0.0;
  double entropy = 0.0;                 // H, nats
  double std_error = 0.0;               // sampling std error of H
  std::map<int, double> p_entropy;      // p -> H_p = sum h log_+^p h dmu
  int bins = 0;
  std::size_t samples = 0;
  double bias_budget = 0.0;
};

EntropyRecord estimate_entropy(std::span<const double> samples, const DensityTable& reference,
                               std::span<const int> p_list = {});

struct EntropyCurve {
  std::vector<EntropyRecord> records;
  double fitted_slope = 0.0;      // slope of log H against t over usable points
  int points_used = 0;            // points with H above 3x their bias budget
};

// Entropy of the law of X_t against the single-site equilibrium, one fresh
// ensemble per grid time. Single-site boxes only.
EntropyCurve entropy_decay_curve(const GibbsSpec& spec, const Configuration& init,
                                 std::span<const double> t_grid, const IntegratorConfig& cfg,
                                 std::size_t samples, std::span<const int> p_list = {},
                                 const GridSpec& grid = {});

// phi(x) = x (1 + log_+(1/x)), continuous at 0.
double phi(double x);

struct RecursionSpec {
  double c = 2.0;   // contraction parameter, must be > 1
  double v0 = 1.0;
  int steps = 100;
};

struct RecursionReport {
  std::vector<double> v;          // v_0 .. v_k
  double x_e = 0.0;               // exp(1 - c), the stable fixed point
  double nominal_factor = 0.0;      // 1 - 1/c
  double contraction_factor = 0.0;  // max(1/c, 1 - 1/c); true Lipschitz bound of the map
  std::vector<bool> nominal_ok;     // v_k <= x_e + nominal^k (v0 - x_e)_+ per step
  std::vector<bool> contraction_ok;
  bool nominal_all_ok = true;
  bool contraction_all_ok = true;
};

// Iterates v_{k+1} = phi(v_k)/c and verifies both decay bounds at every step.
RecursionReport decay_recursion(const RecursionSpec& spec);

struct KSolution {
  double K = 0.0;
  double residual = 0.0;     // |log K - (t / (C_a log log K))^{1/(1-a)}|
  double threshold_t = 0.0;  // C_a e^{1-a}, below which the solution leaves (e^e, inf)
};

// Unique solution of log K = (t / (C_a log log K))^{1/(1-a)} on [e^e, inf).
KSolution solve_K(double t, double a, double C_a);

struct DecayParameters {
  double a = 0.5;          // Beckner exponent used in the bound
  double a_prime = 0.45;   // a' with a_min < a' < a
  double a0 = 0.99;        // a < a0
  double C_a = 1.0;        // GBI-derived constant, user-supplied
  double t0_constant = 1.0;  // the unspecified constant c in t0 = c n^{D(1-a')}
  std::vector<double> Q;   // polynomial coefficients, low to high; degree D

  int degree() const;
  double a_min() const { return (degree() - 1.0) / degree(); }
  double q_of(double n) const;
  void validate() const;
};

struct DecayBound {
  double bound = 0.0;     // (e + H_s) exp(-u^{1/(3-a)} / Q(n)^{(1-a)/(3-a)})
  double t = 0.0;         // recovered from u = t c_{t,n}^2
  double c_tn = 0.0;
  double u0 = 0.0;        // admissibility threshold u_0(n)
};

DecayBound decay_bound(double s, double u, int n, const DecayParameters& params, double H_s);

struct PGrowthRow {
  int box_n = 0;
  int sites = 0;
  double entropy = 0.0;                // multi-site H via per-site additivity
  std::map<int, double> p_entropy;     // direct estimates of H_p
  double linearity_corr = 0.0;         // Pearson r of (p, H_p)
};

struct PGrowthResult {
  std::vector<PGrowthRow> rows;
  double degree = 0.0;                       // slope of log H_1 vs log n
  std::map<int, double> degree_by_p;         // slope of log(H_p/p) vs log n
  std::map<int, double> normalized_degree;   // slope of log(H_p^{1/p}) vs log n
};

// Measures the growth of H_{p,t} in the box radius for a product (J = 0)
// model: per-site histogram densities, sample-level sums of log h.
PGrowthResult measure_p_entropy_growth(const ModelSpec& model, const Configuration& init,
                                       std::span<const int> n_grid, double t,
                                       std::span<const int> p_grid, const IntegratorConfig& cfg,
                                       std::size_t samples, const GridSpec& grid = {});

// Discrete-density helpers used by the entropy inequalities' property checks.
// `weights` is a probability vector mu, `density` the values of h with
// sum mu_i h_i = 1.
double discrete_entropy(std::span<const double> weights, std::span<const double> density);
double discrete_p_entropy(std::span<const double> weights, std::span<const double> density,
                          double p);
// Ent_mu(f) = mu(f log f) - mu(f) log mu(f) for a nonnegative f (homogeneous form).
double discrete_entropy_functional(std::span<const double> weights, std::span<const double> f);

}  // namespace gibbslab
