#include "gibbslab/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "gibbslab/fit.hpp"
#include "gibbslab/numerics.hpp"
#include "gibbslab/rng.hpp"

namespace gibbslab {

namespace {

int bin_count(std::size_t samples) {
  return std::clamp(static_cast<int>(std::floor(std::cbrt(static_cast<double>(samples)))), 2, 512);
}

std::vector<double> quantile_edges(const DensityTable& ref, int bins) {
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  edges.front() = -std::numeric_limits<double>::infinity();
  edges.back() = std::numeric_limits<double>::infinity();
  for (int k = 1; k < bins; ++k)
    edges[static_cast<std::size_t>(k)] = ref.quantile(static_cast<double>(k) / bins);
  return edges;
}

std::size_t bin_of(const std::vector<double>& edges, double x) {
  const auto it = std::upper_bound(edges.begin(), edges.end(), x);
  return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(it - edges.begin() - 1, 0,
                                                             static_cast<std::ptrdiff_t>(edges.size()) - 2));
}

double declared_budget(int bins, std::size_t samples) {
  const double b = bins, n = static_cast<double>(samples);
  // chi-square mean + 4 sd of the plug-in term, plus equal-mass binning error
  return (b - 1) / (2 * n) + 4.0 * std::sqrt(2 * (b - 1)) / (2 * n) + 0.1 / b;
}

double positive_log(double x) { return x > 1.0 ? std::log(x) : 0.0; }

}  // namespace

EntropyRecord estimate_entropy(std::span<const double> samples, const DensityTable& reference,
                               std::span<const int> p_list) {
  const std::size_t n = samples.size();
  if (n < 8) throw resolution_error("estimate_entropy: too few samples for the bin policy");
  const int bins = bin_count(n);
  const auto edges = quantile_edges(reference, bins);

  std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
  for (double x : samples) counts[bin_of(edges, x)] += 1.0;

  // density w.r.t. the reference: h_k = (count_k/n) / (1/bins)
  std::vector<double> h(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) h[k] = counts[k] / static_cast<double>(n) * bins;

  EntropyRecord rec;
  rec.bins = bins;
  rec.samples = n;
  rec.bias_budget = declared_budget(bins, n);

  CompensatedSum acc;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] > 0.0) acc.add(h[k] / bins * std::log(h[k]));
  }
  rec.entropy = acc.result();

  // sampling std error: std of log h(X) over the sample
  CompensatedSum q;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] > 0.0) q.add(counts[k] * sqr(std::log(h[k]) - rec.entropy));
  }
  rec.std_error = std::sqrt(q.result() / static_cast<double>(n)) / std::sqrt(static_cast<double>(n));

  for (int p : p_list) {
    if (p < 1) throw input_error("estimate_entropy: p must be >= 1");
    CompensatedSum ap;
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] > 0.0) ap.add(h[k] / bins * std::pow(positive_log(h[k]), p));
    }
    rec.p_entropy[p] = ap.result();
  }
  return rec;
}

EntropyCurve entropy_decay_curve(const GibbsSpec& spec, const Configuration& init,
                                 std::span<const double> t_grid, const IntegratorConfig& cfg,
                                 std::size_t samples, std::span<const int> p_list,
                                 const GridSpec& grid) {
  if (spec.box.size() != 1)
    throw input_error("entropy_decay_curve: single-site boxes only (honest estimator)");
  const GibbsSpec single = spec;
  const double field = boundary_field(spec)[0];
  const DensityTable ref = single_site_measure(spec.model.potential(), field, grid);

  EntropyCurve curve;
  for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
    IntegratorConfig c = cfg;
    c.horizon = t_grid[ti];
    c.record_times = {t_grid[ti]};
    c.seed = splitmix64(cfg.seed ^ (0xE27u + ti));
    const TrajectoryEnsemble ens = simulate(single, init, c, samples);
    EntropyRecord rec = estimate_entropy(ens.site_series(0, 0), ref, p_list);
    rec.t = t_grid[ti];
    curve.records.push_back(std::move(rec));
  }

  std::vector<double> ts, logh;
  for (const auto& r : curve.records) {
    if (r.entropy > 3.0 * r.bias_budget) {
      ts.push_back(r.t);
      logh.push_back(std::log(r.entropy));
    }
  }
  curve.points_used = static_cast<int>(ts.size());
  if (ts.size() >= 2) curve.fitted_slope = fit_line(ts, logh).slope;
  return curve;
}

double phi(double x) {
  if (x < 0) throw input_error("phi: negative argument");
  if (x == 0.0) return 0.0;
  return x * (1.0 + positive_log(1.0 / x));
}

RecursionReport decay_recursion(const RecursionSpec& spec) {
  if (!(spec.c > 1.0)) throw domain_error("decay_recursion: estimate needs c > 1");
  if (spec.v0 < 0) throw input_error("decay_recursion: v0 must be >= 0");
  if (spec.steps < 0) throw input_error("decay_recursion: steps must be >= 0");
  RecursionReport rep;
  rep.x_e = std::exp(1.0 - spec.c);
  rep.nominal_factor = 1.0 - 1.0 / spec.c;
  rep.contraction_factor = std::max(1.0 / spec.c, rep.nominal_factor);
  rep.v.reserve(static_cast<std::size_t>(spec.steps) + 1);
  rep.v.push_back(spec.v0);
  const double excess = std::max(spec.v0 - rep.x_e, 0.0);
  double nominal_pow = 1.0, contraction_pow = 1.0;
  double v = spec.v0;
  for (int k = 1; k <= spec.steps; ++k) {
    v = phi(v) / spec.c;
    rep.v.push_back(v);
    nominal_pow *= rep.nominal_factor;
    contraction_pow *= rep.contraction_factor;
    const double tol = 1e-12;
    const double nb = rep.x_e + nominal_pow * excess;
    const double cb = rep.x_e + contraction_pow * excess;
    const bool nok = v <= nb * (1.0 + tol);
    const bool cok = v <= cb * (1.0 + tol);
    rep.nominal_ok.push_back(nok);
    rep.contraction_ok.push_back(cok);
    rep.nominal_all_ok &= nok;
    rep.contraction_all_ok &= cok;
  }
  return rep;
}

KSolution solve_K(double t, double a, double C_a) {
  if (!(a >= 0 && a < 1)) throw input_error("solve_K: a must be in [0,1)");
  if (!(C_a > 0)) throw input_error("solve_K: C_a must be > 0");
  KSolution sol;
  sol.threshold_t = C_a * std::exp(1.0 - a);
  if (t < sol.threshold_t * (1.0 - 1e-12))
    throw domain_error("solve_K: t below the K = e^e threshold t* = C_a e^{1-a}");

  // g(y) = C_a y^{1-a} log y - t with y = log K is increasing on [e, inf)
  auto g = [&](double y) { return C_a * std::pow(y, 1.0 - a) * std::log(y) - t; };
  double lo = std::numbers::e;
  double hi = std::numbers::e * 2;
  while (g(hi) < 0) hi *= 2;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
    if (hi - lo < 1e-15 * hi) break;
  }
  const double y = 0.5 * (lo + hi);
  sol.K = std::exp(y);
  sol.residual = std::abs(y - std::pow(t / (C_a * std::log(y)), 1.0 / (1.0 - a)));
  return sol;
}

int DecayParameters::degree() const {
  for (int k = static_cast<int>(Q.size()) - 1; k >= 0; --k)
    if (Q[static_cast<std::size_t>(k)] != 0.0) return k;
  return 0;
}

double DecayParameters::q_of(double n) const { return poly_eval(Q, n); }

void DecayParameters::validate() const {
  const int D = degree();
  if (D < 1) throw input_error("DecayParameters: Q must have degree >= 1");
  const double amin = a_min();
  if (!(amin < a0)) throw domain_error("DecayParameters: a_min = (D-1)/D must be < a0");
  if (!(amin < a_prime && a_prime < a && a < a0))
    throw domain_error("DecayParameters: need a_min < a' < a < a0");
  if (!(C_a > 0) || !(t0_constant > 0)) throw input_error("DecayParameters: constants must be > 0");
}

DecayBound decay_bound(double s, double u, int n, const DecayParameters& params, double H_s) {
  params.validate();
  if (!(s >= 1)) throw input_error("decay_bound: s must be >= 1");
  if (n < 1) throw input_error("decay_bound: n must be >= 1");
  if (H_s < 0) throw input_error("decay_bound: H_s must be >= 0");
  const double D = params.degree();
  const double q = params.q_of(n);
  const double expo = (3.0 - params.a) / (1.0 - params.a);
  const double t0 = params.t0_constant * std::pow(n, D * (1.0 - params.a_prime));
  DecayBound out;
  out.u0 = std::pow(t0, expo) / sqr(q);
  if (!(u > out.u0))
    throw domain_error("decay_bound: u must exceed u0(n) = " + std::to_string(out.u0));
  out.t = std::pow(u * sqr(q), 1.0 / expo);
  out.c_tn = std::pow(out.t, 1.0 / (1.0 - params.a)) / q;
  out.bound = (std::numbers::e + H_s) *
              std::exp(-std::pow(u, 1.0 / (3.0 - params.a)) /
                       std::pow(q, (1.0 - params.a) / (3.0 - params.a)));
  return out;
}

PGrowthResult measure_p_entropy_growth(const ModelSpec& model, const Configuration& init,
                                       std::span<const int> n_grid, double t,
                                       std::span<const int> p_grid, const IntegratorConfig& cfg,
                                       std::size_t samples, const GridSpec& grid) {
  if (model.interaction().sigma() != 0.0)
    throw input_error("measure_p_entropy_growth: product-structure estimator needs J = 0");
  if (model.dim() != 1) throw input_error("measure_p_entropy_growth: d = 1 only");
  if (!(t >= 1.0)) throw input_error("measure_p_entropy_growth: t must be >= 1");
  const DensityTable ref = single_site_measure(model.potential(), 0.0, grid);

  PGrowthResult res;
  std::vector<double> log_n, log_h1;
  std::map<int, std::vector<double>> log_hp_over_p, log_hp_root;

  for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
    const int n = n_grid[gi];
    if (n < 1) throw input_error("measure_p_entropy_growth: box radii must be >= 1");
    const GibbsSpec spec(model, Box(n, 1), Configuration::zero());
    IntegratorConfig c = cfg;
    c.horizon = t;
    c.record_times = {t};
    c.seed = splitmix64(cfg.seed ^ (0x9E3779B9ull + gi));
    const TrajectoryEnsemble ens = simulate(spec, init, c, samples);

    const std::size_t sites = spec.box.size();
    const int bins = bin_count(samples);
    const auto edges = quantile_edges(ref, bins);

    // per-site histogram densities
    std::vector<std::vector<double>> site_logh(sites);
    double h_total = 0.0;
    for (std::size_t si = 0; si < sites; ++si) {
      std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
      for (std::size_t s = 0; s < samples; ++s) counts[bin_of(edges, ens.state(s, 0)[si])] += 1.0;
      auto& lh = site_logh[si];
      lh.resize(counts.size(), 0.0);
      CompensatedSum hacc;
      for (std::size_t k = 0; k < counts.size(); ++k) {
        const double h = counts[k] / static_cast<double>(samples) * bins;
        lh[k] = h > 0 ? std::log(h) : -std::numeric_limits<double>::infinity();
        if (h > 0) hacc.add(h / bins * std::log(h));
      }
      h_total += hacc.result();  // KL adds over independent sites
    }

    // sample-level S = sum_i log h_i(x_i); H_p = mean (S_+)^p
    PGrowthRow row;
    row.box_n = n;
    row.sites = static_cast<int>(sites);
    row.entropy = h_total;
    std::map<int, CompensatedSum> hp;
    for (std::size_t s = 0; s < samples; ++s) {
      CompensatedSum sacc;
      const auto state = ens.state(s, 0);
      for (std::size_t si = 0; si < sites; ++si)
        sacc.add(site_logh[si][bin_of(edges, state[si])]);
      const double spos = std::max(sacc.result(), 0.0);
      for (int p : p_grid) hp[p].add(std::pow(spos, p));
    }
    std::vector<double> ps, hps;
    for (int p : p_grid) {
      const double v = hp[p].result() / static_cast<double>(samples);
      row.p_entropy[p] = v;
      ps.push_back(p);
      hps.push_back(v);
      if (v > 0) {
        log_hp_over_p[p].push_back(std::log(v / p));
        log_hp_root[p].push_back(std::log(std::pow(v, 1.0 / p)));
      }
    }
    row.linearity_corr = ps.size() >= 2 ? pearson_corr(ps, hps) : 0.0;
    res.rows.push_back(std::move(row));
    log_n.push_back(std::log(static_cast<double>(n)));
    if (res.rows.back().p_entropy.count(1) && res.rows.back().p_entropy[1] > 0)
      log_h1.push_back(std::log(res.rows.back().p_entropy[1]));
  }

  if (log_h1.size() == log_n.size() && log_n.size() >= 2)
    res.degree = fit_line(log_n, log_h1).slope;
  for (int p : p_grid) {
    if (log_hp_over_p[p].size() == log_n.size() && log_n.size() >= 2) {
      res.degree_by_p[p] = fit_line(log_n, log_hp_over_p[p]).slope;
      res.normalized_degree[p] = fit_line(log_n, log_hp_root[p]).slope;
    }
  }
  return res;
}

double discrete_entropy(std::span<const double> weights, std::span<const double> density) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (density[i] > 0) acc.add(weights[i] * density[i] * std::log(density[i]));
  }
  return acc.result();
}

double discrete_p_entropy(std::span<const double> weights, std::span<const double> density,
                          double p) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (density[i] > 1.0) acc.add(weights[i] * density[i] * std::pow(std::log(density[i]), p));
  }
  return acc.result();
}

double discrete_entropy_functional(std::span<const double> weights, std::span<const double> f) {
  CompensatedSum acc, mass;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    mass.add(weights[i] * f[i]);
    if (f[i] > 0) acc.add(weights[i] * f[i] * std::log(f[i]));
  }
  const double m = mass.result();
  if (m <= 0) return 0.0;
  return acc.result() - m * std::log(m);
}

}  // namespace gibbslab
