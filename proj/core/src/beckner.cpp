#include "gibbslab/beckner.hpp"

#include <algorithm>
#include <cmath>

#include "gibbslab/fit.hpp"
#include "gibbslab/numerics.hpp"

namespace gibbslab {

namespace {

constexpr std::size_t kGapBudget = 50000;
const double kLog2 = std::log(2.0);

// log( log(1 + 1/(2R)) ) from log R; the base exceeds 1, so this is finite.
double log_log_factor(double log_R) {
  const double t = -(kLog2 + log_R);  // log(1/(2R))
  if (t > 30.0) return std::log(t + log1p_exp(-t));
  return std::log(std::log1p(std::exp(t)));
}

// Shared prefix structures for criterion evaluation.
struct CriterionTables {
  std::vector<double> lse_mu_suffix;  // log R+(x)
  std::vector<double> lse_mu_prefix;  // log R-(x)
  std::vector<double> lse_w_prefix;   // log sum_{y<=x} 1/(mu(y) b(y))

  explicit CriterionTables(const BirthDeathChain& c) {
    const std::size_t m = c.states();
    lse_mu_suffix.resize(m);
    lse_mu_prefix.resize(m);
    lse_w_prefix.resize(m);
    LogSumAccumulator fwd;
    for (std::size_t x = 0; x < m; ++x) {
      fwd.add(c.log_mu(static_cast<int>(x)));
      lse_mu_prefix[x] = fwd.log_sum();
    }
    LogSumAccumulator bwd;
    for (std::size_t x = m; x-- > 0;) {
      bwd.add(c.log_mu(static_cast<int>(x)));
      lse_mu_suffix[x] = bwd.log_sum();
    }
    LogSumAccumulator wacc;
    for (std::size_t x = 0; x < m; ++x) {
      wacc.add(-(c.log_mu(static_cast<int>(x)) + c.log_birth(static_cast<int>(x))));
      lse_w_prefix[x] = wacc.log_sum();
    }
  }

  // log S+(i,x) = log( sum_{y=i+1}^{x} w(y) )
  double log_s_plus(int i, int x) const {
    const double a = lse_w_prefix[static_cast<std::size_t>(x)];
    if (i < 0) return a;
    return log_diff_exp(a, lse_w_prefix[static_cast<std::size_t>(i)]);
  }
  // log S-(i,x) = log( sum_{y=x}^{i-1} w(y) )
  double log_s_minus(int i, int x) const {
    const double a = lse_w_prefix[static_cast<std::size_t>(i - 1)];
    if (x == 0) return a;
    return log_diff_exp(a, lse_w_prefix[static_cast<std::size_t>(x - 1)]);
  }
};

double log_b_plus(const CriterionTables& t, int top, double a, int i) {
  if (i >= top) return kNegInf;
  double best = kNegInf;
  for (int x = i + 1; x <= top; ++x) {
    const double lr = t.lse_mu_suffix[static_cast<std::size_t>(x)];
    double v = t.log_s_plus(i, x) + lr;
    if (a > 0.0) v += a * log_log_factor(lr);
    best = std::max(best, v);
  }
  return best;
}

double log_b_minus(const CriterionTables& t, double a, int i) {
  if (i <= 0) return kNegInf;
  double best = kNegInf;
  for (int x = 0; x < i; ++x) {
    const double lr = t.lse_mu_prefix[static_cast<std::size_t>(x)];
    double v = t.log_s_minus(i, x) + lr;
    if (a > 0.0) v += a * log_log_factor(lr);
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

BirthDeathChain::BirthDeathChain(std::vector<double> log_birth, std::vector<double> log_death)
    : log_b_(std::move(log_birth)), log_d_(std::move(log_death)) {
  if (log_b_.size() != log_d_.size() || log_b_.size() < 2)
    throw input_error("BirthDeathChain: need matching rate arrays with >= 2 states");
  for (std::size_t x = 0; x < log_b_.size(); ++x) {
    if (!std::isfinite(log_b_[x]) && x + 1 < log_b_.size())
      throw input_error("BirthDeathChain: non-finite birth rate");
    if (x >= 1 && !std::isfinite(log_d_[x]))
      throw input_error("BirthDeathChain: non-finite death rate");
  }
  // integrate detailed balance, then normalize in the log domain
  log_mu_.resize(log_b_.size());
  log_mu_[0] = 0.0;
  for (std::size_t x = 0; x + 1 < log_b_.size(); ++x)
    log_mu_[x + 1] = log_mu_[x] + log_b_[x] - log_d_[x + 1];
  LogSumAccumulator z;
  for (double lm : log_mu_) z.add(lm);
  log_z_ = z.log_sum();
  for (double& lm : log_mu_) lm -= log_z_;
}

BirthDeathChain toy_chain(int d_dim, int N) {
  if (d_dim == 1)
    throw domain_error("toy_chain: d = 1 gives alpha = 0, a degenerate chain; need d >= 2");
  if (d_dim < 2) throw input_error("toy_chain: d must be >= 2");
  if (N < 2) throw input_error("toy_chain: N must be >= 2");
  const double alpha = (d_dim - 1.0) / d_dim;
  double m_real = std::pow(static_cast<double>(N), d_dim);
  if (m_real > 2.5e6) throw resolution_error("toy_chain: state count over budget");
  const int M = static_cast<int>(std::llround(m_real));

  std::vector<double> lb(static_cast<std::size_t>(M) + 1), ld(static_cast<std::size_t>(M) + 1);
  lb[0] = 0.0;  // b(0) = 1
  ld[0] = kNegInf;
  if (M >= 1) ld[1] = 1.0;  // d(1) = e
  for (int x = 1; x <= M; ++x) {
    lb[static_cast<std::size_t>(x)] = alpha * std::log(static_cast<double>(x));
    if (x + 1 <= M) {
      // (x+1)^alpha - x^alpha via expm1 keeps the increment accurate for large x
      const double inc =
          std::pow(static_cast<double>(x), alpha) * std::expm1(alpha * std::log1p(1.0 / x));
      ld[static_cast<std::size_t>(x + 1)] = alpha * std::log(static_cast<double>(x)) + inc;
    }
  }
  BirthDeathChain chain(std::move(lb), std::move(ld));
  chain.set_toy({d_dim, N, alpha});
  return chain;
}

CriterionResult muckenhoupt_beckner(const BirthDeathChain& chain, double a,
                                    std::span<const int> probe_set) {
  if (!(a >= 0.0 && a < 1.0)) throw input_error("muckenhoupt_beckner: a must be in [0,1)");
  if (probe_set.empty()) throw input_error("muckenhoupt_beckner: empty probe set");
  const CriterionTables tables(chain);
  CriterionResult res;
  res.a = a;
  double best_two = std::numeric_limits<double>::infinity();
  double best_one = std::numeric_limits<double>::infinity();
  for (int i : probe_set) {
    if (i < 0 || i > chain.top()) throw input_error("muckenhoupt_beckner: probe out of range");
    const double bp = log_b_plus(tables, chain.top(), a, i);
    const double bm = log_b_minus(tables, a, i);
    res.probes.push_back(i);
    res.log_b_plus.push_back(bp);
    res.log_b_minus.push_back(bm);
    best_two = std::min(best_two, std::max(bp, bm));
    best_one = std::min(best_one, std::min(bp, bm));
  }
  res.log_B_two_sided = best_two;
  res.log_B_one_sided = best_one;
  return res;
}

std::vector<int> make_probe_set(int top, ProbePolicy policy) {
  std::vector<int> probes;
  if (policy == ProbePolicy::full) {
    if (top + 1 > 10000) throw resolution_error("make_probe_set: full scan capped at 1e4 states");
    for (int i = 0; i <= top; ++i) probes.push_back(i);
    return probes;
  }
  probes.push_back(0);
  for (int i = 1; i <= top; i *= 2) probes.push_back(i);
  probes.push_back(top / 2);
  probes.push_back(top);
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  return probes;
}

CriterionResult beckner_exact_inf(const BirthDeathChain& chain, double a) {
  if (!(a >= 0.0 && a < 1.0)) throw input_error("beckner_exact_inf: a must be in [0,1)");
  const CriterionTables tables(chain);
  const int top = chain.top();
  // smallest i with B-(i) >= B+(i); the difference is nondecreasing in i
  int lo = 0, hi = top;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (log_b_minus(tables, a, mid) >= log_b_plus(tables, top, a, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  CriterionResult res;
  res.a = a;
  double best_two = std::numeric_limits<double>::infinity();
  double best_one = std::numeric_limits<double>::infinity();
  for (int i : {std::max(0, lo - 1), lo, std::min(top, lo + 1)}) {
    if (!res.probes.empty() && res.probes.back() == i) continue;
    const double bp = log_b_plus(tables, top, a, i);
    const double bm = log_b_minus(tables, a, i);
    res.probes.push_back(i);
    res.log_b_plus.push_back(bp);
    res.log_b_minus.push_back(bm);
    best_two = std::min(best_two, std::max(bp, bm));
    best_one = std::min(best_one, std::min(bp, bm));
  }
  res.log_B_two_sided = best_two;
  res.log_B_one_sided = best_one;
  return res;
}

double spectral_gap(const BirthDeathChain& chain) {
  const std::size_t m = chain.states();
  if (m > kGapBudget) throw resolution_error("spectral_gap: state count over eigensolve budget");
  // symmetric tridiagonal: diag b(x)+d(x) (b at top and d at 0 vanish),
  // off-diagonal -sqrt(b(x) d(x+1))
  std::vector<double> diag(m), off(m > 1 ? m - 1 : 0);
  for (std::size_t x = 0; x < m; ++x) {
    const double b = (x + 1 < m) ? chain.birth(static_cast<int>(x)) : 0.0;
    const double d = (x >= 1) ? chain.death(static_cast<int>(x)) : 0.0;
    diag[x] = b + d;
    if (x + 1 < m)
      off[x] = -std::exp(0.5 * (chain.log_birth(static_cast<int>(x)) +
                                chain.log_death(static_cast<int>(x) + 1)));
  }
  // Sturm count: number of eigenvalues below lambda
  auto count_below = [&](double lambda) {
    int cnt = 0;
    double q = diag[0] - lambda;
    if (q < 0) ++cnt;
    for (std::size_t i = 1; i < m; ++i) {
      const double denom = (q == 0.0) ? 1e-300 : q;
      q = diag[i] - lambda - off[i - 1] * off[i - 1] / denom;
      if (q < 0) ++cnt;
    }
    return cnt;
  };
  double hi = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double r = diag[i];
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < m) r += std::abs(off[i]);
    hi = std::max(hi, r);
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(mid) >= 2)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

ScalingResult scaling_study(int d_dim, double a, std::span<const int> N_grid, ProbePolicy policy) {
  if (N_grid.size() < 4) throw input_error("scaling_study: need >= 4 grid points");
  for (std::size_t i = 1; i < N_grid.size(); ++i) {
    if (N_grid[i] <= N_grid[i - 1]) throw input_error("scaling_study: N_grid must increase");
  }
  (void)policy;  // the exact crossing search supersedes probe policies here
  ScalingResult res;
  std::vector<double> lx, ly;
  for (int N : N_grid) {
    const BirthDeathChain chain = toy_chain(d_dim, N);
    const CriterionResult cr = beckner_exact_inf(chain, a);
    res.rows.push_back({N, chain.states(), cr.log_B_two_sided});
    lx.push_back(std::log(static_cast<double>(N)));
    ly.push_back(cr.log_B_two_sided);
  }
  const LineFit lf = fit_line(lx, ly);
  res.slope = lf.slope;
  res.fit_residual = lf.max_residual;
  res.predicted_exponent = (3.0 - d_dim) + (d_dim - 1.0) * a;
  return res;
}

AThreshold a_threshold(int d_dim) {
  if (d_dim < 2) throw input_error("a_threshold: d must be >= 2");
  AThreshold t;
  t.a_d = (d_dim - 3.0) / (d_dim - 1.0);
  if (t.a_d <= 0.0 && d_dim < 3)
    t.interpretation = "all constants blow up";
  else if (d_dim == 3)
    t.interpretation = "Poincare bounded, every a > 0 blows up";
  else
    t.interpretation = "threshold inside (0,1)";
  return t;
}

TailRatioTable tail_estimate_check(const BirthDeathChain& chain, std::span<const int> x_grid) {
  if (!chain.toy()) throw input_error("tail_estimate_check: chain must come from toy_chain");
  const double alpha = chain.toy()->alpha;
  const CriterionTables tables(chain);
  TailRatioTable out;
  out.min_R = out.min_S = std::numeric_limits<double>::infinity();
  for (int x : x_grid) {
    if (x < 1 || x > chain.top()) throw input_error("tail_estimate_check: x out of range");
    const double lx = std::log(static_cast<double>(x));
    const double xa = std::pow(static_cast<double>(x), alpha);
    TailRatioRow row;
    row.x = x;
    const double log_theory_R = (1.0 - alpha) * lx - xa - chain.log_z();
    row.ratio_R = std::exp(tables.lse_mu_suffix[static_cast<std::size_t>(x)] - log_theory_R);
    const double log_theory_S = chain.log_z() + (1.0 - 2.0 * alpha) * lx + xa;
    row.ratio_S = std::exp(tables.log_s_plus(0, x) - log_theory_S);
    out.min_R = std::min(out.min_R, row.ratio_R);
    out.max_R = std::max(out.max_R, row.ratio_R);
    out.min_S = std::min(out.min_S, row.ratio_S);
    out.max_S = std::max(out.max_S, row.ratio_S);
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace gibbslab
