#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gibbslab/errors.hpp"

namespace gibbslab {

// Birth-death chain on {0..M} with reversible weights kept in the log domain.
// Detailed balance log mu(x) + log b(x) = log mu(x+1) + log d(x+1) is exact
// by construction when built from rates.
class BirthDeathChain {
 public:
  struct ToyParams {
    int d_dim = 0;
    int N = 0;
    double alpha = 0.0;  // (d-1)/d
  };

  // From log rates; reversible weights are integrated from detailed balance
  // and normalized by log-sum-exp.
  BirthDeathChain(std::vector<double> log_birth, std::vector<double> log_death);

  std::size_t states() const { return log_mu_.size(); }
  int top() const { return static_cast<int>(states()) - 1; }

  double log_mu(int x) const { return log_mu_[static_cast<std::size_t>(x)]; }
  double log_birth(int x) const { return log_b_[static_cast<std::size_t>(x)]; }
  double log_death(int x) const { return log_d_[static_cast<std::size_t>(x)]; }
  double birth(int x) const { return std::exp(log_birth(x)); }
  double death(int x) const { return std::exp(log_death(x)); }
  double log_z() const { return log_z_; }

  const std::optional<ToyParams>& toy() const { return toy_; }
  void set_toy(ToyParams p) { toy_ = p; }

 private:
  std::vector<double> log_b_;
  std::vector<double> log_d_;  // log_d_[0] unused
  std::vector<double> log_mu_;
  double log_z_ = 0.0;
  std::optional<ToyParams> toy_;
};

// The droplet-dynamics toy model: states {0..N^d}, alpha = (d-1)/d,
//   b(x) = x^alpha (x >= 1), b(0) = 1,
//   d(x+1) = x^alpha exp((x+1)^alpha - x^alpha) (x >= 1), d(1) = e,
// reversible w.r.t. mu(x) proportional to exp(-x^alpha). The death formula is
// extended down to x = 1 so detailed balance holds at every edge.
BirthDeathChain toy_chain(int d_dim, int N);

struct CriterionResult {
  double a = 0.0;
  std::vector<int> probes;
  std::vector<double> log_b_plus;   // log B_+(i) per probe; -inf when empty
  std::vector<double> log_b_minus;
  // Two combinations of the sides (kept as log values):
  double log_B_two_sided = 0.0;  // inf over probes of max(B+, B-); used downstream
  double log_B_one_sided = 0.0;  // inf over probes of min(B+, B-); the literal "wedge"
  double B() const { return std::exp(log_B_two_sided); }
  double B_wedge() const { return std::exp(log_B_one_sided); }
};

// Muckenhoupt-type quantities for GBI(a):
//   R+(x) = sum_{y>=x} mu(y),  S+(i,x) = sum_{y=i+1..x} 1/(mu(y) b(y)),
//   B+(i) = sup_{x>i} S+(i,x) R+(x) log^a(1 + 1/(2 R+(x))), mirrored for B-.
// All sums, products and sups stay in the log domain.
CriterionResult muckenhoupt_beckner(const BirthDeathChain& chain, double a,
                                    std::span<const int> probe_set);

enum class ProbePolicy { geometric, full };

std::vector<int> make_probe_set(int top, ProbePolicy policy);

// Exact inf over all i of max(B+(i), B-(i)): B+ is nonincreasing and B-
// nondecreasing in i, so the inf sits at their crossing (binary search).
CriterionResult beckner_exact_inf(const BirthDeathChain& chain, double a);

// Smallest nonzero eigenvalue of the symmetrized generator (tridiagonal with
// diagonal b(x)+d(x) and off-diagonal -sqrt(b(x) d(x+1))), by Sturm bisection.
double spectral_gap(const BirthDeathChain& chain);

struct ScalingRow {
  int N = 0;
  std::size_t states = 0;
  double log_B = 0.0;
};

struct ScalingResult {
  std::vector<ScalingRow> rows;
  double slope = 0.0;               // of log B against log N
  double predicted_exponent = 0.0;  // (3-d) + (d-1) a
  double fit_residual = 0.0;
};

ScalingResult scaling_study(int d_dim, double a, std::span<const int> N_grid,
                            ProbePolicy policy = ProbePolicy::full);

struct AThreshold {
  double a_d = 0.0;
  std::string interpretation;  // "all constants blow up" when a_d <= 0
};

// Root in a of the derived growth exponent (3-d) + (d-1) a.
AThreshold a_threshold(int d_dim);

struct TailRatioRow {
  int x = 0;
  double ratio_R = 0.0;  // R+(x) / (x^{1-alpha} e^{-x^alpha} / Z)
  double ratio_S = 0.0;  // S+(0,x) / (Z x^{1-2alpha} e^{x^alpha})
};

struct TailRatioTable {
  std::vector<TailRatioRow> rows;
  double min_R = 0.0, max_R = 0.0;
  double min_S = 0.0, max_S = 0.0;
};

TailRatioTable tail_estimate_check(const BirthDeathChain& chain, std::span<const int> x_grid);

}  // namespace gibbslab
