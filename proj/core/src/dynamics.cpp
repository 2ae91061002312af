#include "gibbslab/dynamics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <thread>

#include "gibbslab/fit.hpp"
#include "gibbslab/numerics.hpp"
#include "gibbslab/rng.hpp"

namespace gibbslab {

namespace {

struct StepGrid {
  std::int64_t steps;
  double dt_eff;
  std::vector<std::int64_t> record_steps;  // ascending, last == steps
};

// Rounding policy: the step count is llround(T/dt) and dt is adjusted to hit
// the horizon exactly.
StepGrid make_grid(const IntegratorConfig& cfg, const std::vector<double>& times) {
  if (!(cfg.dt > 0)) throw input_error("integrator: dt must be > 0");
  if (!(cfg.horizon > 0)) throw input_error("integrator: horizon must be > 0");
  if (cfg.dt > cfg.horizon) throw input_error("integrator: dt must be <= horizon");
  if (cfg.noise_scale != 0.0 && cfg.noise_scale != 1.0)
    throw input_error("integrator: noise_scale must be 0 or 1");
  StepGrid g;
  g.steps = std::llround(cfg.horizon / cfg.dt);
  if (g.steps < 1) g.steps = 1;
  g.dt_eff = cfg.horizon / static_cast<double>(g.steps);
  for (double t : times) {
    if (t < 0 || t > cfg.horizon * (1 + 1e-12))
      throw input_error("integrator: record time outside [0, horizon]");
    g.record_steps.push_back(std::clamp<std::int64_t>(std::llround(t / g.dt_eff), 0, g.steps));
  }
  return g;
}

// Box geometry compiled to flat arrays: in-box neighbor lists plus the
// constant boundary field.
struct CompiledBox {
  std::size_t sites;
  std::vector<std::uint64_t> site_keys;
  std::vector<double> h;                                   // boundary field per site
  std::vector<std::vector<std::pair<std::size_t, double>>> nbs;  // (index, J)

  CompiledBox(const GibbsSpec& spec) : sites(spec.box.size()), h(boundary_field(spec)) {
    site_keys.resize(sites);
    nbs.resize(sites);
    for (std::size_t idx = 0; idx < sites; ++idx) {
      const Site i = spec.box.site_at(idx);
      site_keys[idx] = i.key64();
      for (const auto& [off, j] : spec.model.interaction().entries()) {
        const Site nb = i + off;
        if (spec.box.contains(nb)) nbs[idx].emplace_back(spec.box.index_of(nb), j);
      }
    }
  }
};

inline double tamed_drift_increment(double drift, double dt) {
  return drift * dt / (1.0 + dt * std::abs(drift));
}

void init_state(const GibbsSpec& spec, const Configuration& init, std::vector<double>& x) {
  x.resize(spec.box.size());
  for (std::size_t idx = 0; idx < spec.box.size(); ++idx) x[idx] = init.at(spec.box.site_at(idx));
}

// One sample path; calls `record(time_slot)` after reaching each record step
// and `observe(step_index)` after every step.
template <typename Record>
void run_path(const ModelSpec& model, const CompiledBox& cb, std::vector<double>& x,
              const StepGrid& grid, double noise_scale, const NoiseField& noise,
              std::uint64_t sample, Record&& record) {
  const auto& pot = model.potential();
  const double dt = grid.dt_eff;
  const double root = noise_scale * std::sqrt(2.0 * dt);
  std::size_t next_rec = 0;
  while (next_rec < grid.record_steps.size() && grid.record_steps[next_rec] == 0) {
    record(next_rec);
    ++next_rec;
  }
  std::vector<double> drift(cb.sites);
  for (std::int64_t step = 0; step < grid.steps; ++step) {
    for (std::size_t i = 0; i < cb.sites; ++i) {
      double d = pot.deriv(x[i]) + cb.h[i];
      for (const auto& [nb, j] : cb.nbs[i]) d += j * x[nb];
      drift[i] = -d;
    }
    for (std::size_t i = 0; i < cb.sites; ++i) {
      double dx = tamed_drift_increment(drift[i], dt);
      if (root != 0.0)
        dx += root * noise.normal(sample, cb.site_keys[i], static_cast<std::uint64_t>(step));
      x[i] += dx;
      if (!std::isfinite(x[i]))
        throw blowup_error(step, "integrator: non-finite state at step " + std::to_string(step));
    }
    while (next_rec < grid.record_steps.size() && grid.record_steps[next_rec] == step + 1) {
      record(next_rec);
      ++next_rec;
    }
  }
}

int effective_workers(int requested, std::size_t samples) {
  int w = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (w < 1) w = 1;
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(w), samples ? samples : 1));
}

// Runs `body(sample)` over [0, samples) on a worker pool; any exception is
// rethrown on the caller thread.
template <typename Body>
void parallel_samples(std::size_t samples, int workers, Body&& body) {
  const int w = effective_workers(workers, samples);
  if (w <= 1) {
    for (std::size_t s = 0; s < samples; ++s) body(s);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(static_cast<std::size_t>(w));
  const std::size_t chunk = (samples + static_cast<std::size_t>(w) - 1) / static_cast<std::size_t>(w);
  for (int k = 0; k < w; ++k) {
    pool.emplace_back([&, k]() {
      const std::size_t lo = static_cast<std::size_t>(k) * chunk;
      const std::size_t hi = std::min(samples, lo + chunk);
      try {
        for (std::size_t s = lo; s < hi; ++s) body(s);
      } catch (...) {
        errs[static_cast<std::size_t>(k)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

void check_tempered(const Configuration& init) {
  if (!init.satisfies_declared_temperedness())
    throw input_error("simulate: initial configuration violates its temperedness class");
}

SemigroupEstimate mean_and_se(std::span<const double> values) {
  CompensatedSum s;
  for (double v : values) s.add(v);
  const double mean = s.result() / static_cast<double>(values.size());
  CompensatedSum q;
  for (double v : values) q.add(sqr(v - mean));
  const double var = values.size() > 1 ? q.result() / static_cast<double>(values.size() - 1) : 0.0;
  SemigroupEstimate e;
  e.estimate = mean;
  e.std_error = std::sqrt(var / static_cast<double>(values.size()));
  return e;
}

}  // namespace

TrajectoryEnsemble::TrajectoryEnsemble(Box box, std::vector<double> record_times,
                                       std::size_t samples, std::uint64_t seed)
    : box_(box), times_(std::move(record_times)), samples_(samples), seed_(seed),
      data_(samples * times_.size() * box.size(), 0.0) {}

std::span<double> TrajectoryEnsemble::state(std::size_t sample, std::size_t time_idx) {
  const std::size_t n = box_.size();
  return {data_.data() + (sample * times_.size() + time_idx) * n, n};
}

std::span<const double> TrajectoryEnsemble::state(std::size_t sample, std::size_t time_idx) const {
  const std::size_t n = box_.size();
  return {data_.data() + (sample * times_.size() + time_idx) * n, n};
}

std::vector<double> TrajectoryEnsemble::site_series(std::size_t time_idx,
                                                    std::size_t site_idx) const {
  std::vector<double> out(samples_);
  for (std::size_t s = 0; s < samples_; ++s) out[s] = state(s, time_idx)[site_idx];
  return out;
}

TrajectoryEnsemble simulate(const GibbsSpec& spec, const Configuration& init,
                            const IntegratorConfig& cfg, std::size_t samples) {
  if (samples == 0) throw input_error("simulate: need at least one sample");
  check_tempered(init);
  std::vector<double> times = cfg.record_times.empty()
                                  ? std::vector<double>{cfg.horizon}
                                  : cfg.record_times;
  std::sort(times.begin(), times.end());
  const StepGrid grid = make_grid(cfg, times);
  const CompiledBox cb(spec);
  const NoiseField noise(cfg.seed);

  TrajectoryEnsemble ens(spec.box, times, samples, cfg.seed);
  parallel_samples(samples, cfg.workers, [&](std::size_t s) {
    std::vector<double> x;
    init_state(spec, init, x);
    run_path(spec.model, cb, x, grid, cfg.noise_scale, noise, s, [&](std::size_t slot) {
      std::copy(x.begin(), x.end(), ens.state(s, slot).begin());
    });
  });
  return ens;
}

CouplingEstimate coupled_discrepancy(const GibbsSpec& spec_inner, const GibbsSpec& spec_outer,
                                     const Configuration& init, double t,
                                     const WeightTable& table, const IntegratorConfig& cfg,
                                     std::size_t samples) {
  if (!spec_inner.box.nested_in(spec_outer.box))
    throw input_error("coupled_discrepancy: boxes must be nested L in M");
  if (!spec_inner.model.same_model(spec_outer.model))
    throw input_error("coupled_discrepancy: models must be identical");
  auto zero_boundary = [](const Configuration& c) {
    if (!c.fill() || *c.fill() != 0.0) return false;
    for (const auto& [s, v] : c.stored())
      if (v != 0.0) return false;
    return true;
  };
  if (!zero_boundary(spec_inner.boundary) || !zero_boundary(spec_outer.boundary))
    throw input_error("coupled_discrepancy: boundary must be 0");
  if (samples == 0) throw input_error("coupled_discrepancy: need samples");
  check_tempered(init);

  IntegratorConfig run_cfg = cfg;
  run_cfg.horizon = t;
  const StepGrid grid = make_grid(run_cfg, {t});
  const CompiledBox cbL(spec_inner);
  const CompiledBox cbM(spec_outer);
  const NoiseField noise(cfg.seed);
  const auto& pot = spec_inner.model.potential();
  const double dt = grid.dt_eff;
  const double root = run_cfg.noise_scale * std::sqrt(2.0 * dt);

  // alpha weights for the outer box sites (inner states read 0 outside L)
  const std::size_t nM = spec_outer.box.size();
  std::vector<double> w(nM);
  std::vector<std::ptrdiff_t> into_inner(nM, -1);
  for (std::size_t i = 0; i < nM; ++i) {
    const Site s = spec_outer.box.site_at(i);
    w[i] = table.at(s);
    if (spec_inner.box.contains(s))
      into_inner[i] = static_cast<std::ptrdiff_t>(spec_inner.box.index_of(s));
  }

  std::vector<double> per_sample(samples, 0.0);
  parallel_samples(samples, cfg.workers, [&](std::size_t s) {
    std::vector<double> xL, xM, driftL(cbL.sites), driftM(cbM.sites), supsq(nM, 0.0);
    init_state(spec_inner, init, xL);
    init_state(spec_outer, init, xM);
    for (std::int64_t step = 0; step < grid.steps; ++step) {
      for (std::size_t i = 0; i < cbL.sites; ++i) {
        double d = pot.deriv(xL[i]) + cbL.h[i];
        for (const auto& [nb, j] : cbL.nbs[i]) d += j * xL[nb];
        driftL[i] = -d;
      }
      for (std::size_t i = 0; i < cbM.sites; ++i) {
        double d = pot.deriv(xM[i]) + cbM.h[i];
        for (const auto& [nb, j] : cbM.nbs[i]) d += j * xM[nb];
        driftM[i] = -d;
      }
      for (std::size_t i = 0; i < cbL.sites; ++i) {
        double dx = tamed_drift_increment(driftL[i], dt);
        if (root != 0.0)
          dx += root * noise.normal(s, cbL.site_keys[i], static_cast<std::uint64_t>(step));
        xL[i] += dx;
      }
      for (std::size_t i = 0; i < cbM.sites; ++i) {
        double dx = tamed_drift_increment(driftM[i], dt);
        if (root != 0.0)
          dx += root * noise.normal(s, cbM.site_keys[i], static_cast<std::uint64_t>(step));
        xM[i] += dx;
        if (!std::isfinite(xM[i]))
          throw blowup_error(step, "coupled_discrepancy: non-finite state");
      }
      for (std::size_t i = 0; i < nM; ++i) {
        const double inner = into_inner[i] >= 0 ? xL[static_cast<std::size_t>(into_inner[i])] : 0.0;
        supsq[i] = std::max(supsq[i], sqr(inner - xM[i]));
      }
    }
    CompensatedSum acc;
    for (std::size_t i = 0; i < nM; ++i) acc.add(w[i] * supsq[i]);
    per_sample[s] = acc.result();
  });

  const auto m = mean_and_se(per_sample);
  return {m.estimate, m.std_error};
}

CouplingFit fit_coupling_constants(std::span<const CouplingPoint> points) {
  std::vector<double> ts, ns, logd;
  for (const auto& p : points) {
    if (!(p.discrepancy > 0))
      throw fit_error("fit_coupling_constants: nonpositive discrepancy (degenerate data)");
    ts.push_back(p.t);
    ns.push_back(p.box_n);
    logd.push_back(std::log(p.discrepancy));
  }
  auto distinct = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  };
  if (distinct(ts) < 3 || distinct(ns) < 3)
    throw fit_error("fit_coupling_constants: need >= 3 distinct t and n values");
  const PlaneFit pf = fit_plane(ts, ns, logd);
  CouplingFit f;
  f.k_prime = pf.c1;
  f.d_alpha_prime = -pf.c2;
  f.max_residual = pf.max_residual;
  // inflate the intercept so log D <= log_c + k' t - d' n everywhere on the grid
  f.log_c = pf.c0 + pf.max_residual;
  f.bound_holds_pointwise = true;
  for (std::size_t i = 0; i < logd.size(); ++i) {
    if (logd[i] > f.log_c + f.k_prime * ts[i] - f.d_alpha_prime * ns[i] + 1e-12)
      f.bound_holds_pointwise = false;
  }
  return f;
}

TestFunction make_test_function(const std::string& name) {
  auto parse_suffix = [&](std::size_t pos) {
    int k = 0;
    const char* b = name.data() + pos;
    const char* e = name.data() + name.size();
    auto [p, ec] = std::from_chars(b, e, k);
    if (ec != std::errc{} || p != e)
      throw input_error("test function: bad coordinate in '" + name + "'");
    return k;
  };
  TestFunction f;
  f.name = name;
  if (name.starts_with("coord:")) {
    const int k = parse_suffix(6);
    f.osc = std::numeric_limits<double>::infinity();
    f.eval = [k](std::span<const double> x, const Box& box) {
      Site s{};
      s.c[0] = k;
      if (!box.contains(s)) throw input_error("test function: coordinate outside box");
      return x[box.index_of(s)];
    };
    return f;
  }
  if (name.starts_with("tanh:")) {
    const int k = parse_suffix(5);
    f.osc = 2.0;
    f.eval = [k](std::span<const double> x, const Box& box) {
      Site s{};
      s.c[0] = k;
      if (!box.contains(s)) throw input_error("test function: coordinate outside box");
      return std::tanh(x[box.index_of(s)]);
    };
    return f;
  }
  if (name.starts_with("const:")) {
    double c = 0.0;
    try {
      c = std::stod(name.substr(6));
    } catch (...) {
      throw input_error("test function: bad constant in '" + name + "'");
    }
    f.osc = 0.0;
    f.eval = [c](std::span<const double>, const Box&) { return c; };
    return f;
  }
  throw input_error("test function: unknown name '" + name + "'");
}

SemigroupEstimate semigroup_estimate(const GibbsSpec& spec, const TestFunction& f,
                                     const Configuration& init, double t,
                                     const IntegratorConfig& cfg, std::size_t samples) {
  if (!f.eval) throw input_error("semigroup_estimate: empty test function");
  if (samples == 0) throw input_error("semigroup_estimate: need samples");
  IntegratorConfig run_cfg = cfg;
  run_cfg.horizon = t;
  run_cfg.record_times = {t};
  const TrajectoryEnsemble ens = simulate(spec, init, run_cfg, samples);
  std::vector<double> vals(samples);
  for (std::size_t s = 0; s < samples; ++s) vals[s] = f.eval(ens.state(s, 0), spec.box);
  return mean_and_se(vals);
}

int n_of_t(double rho, double t) {
  if (!(rho > 0) || !(t > 0)) throw input_error("n_of_t: rho and t must be > 0");
  return static_cast<int>(std::floor(rho * t)) + 1;
}

std::vector<UniquenessRow> uniqueness_demo(const ModelSpec& model, double rho,
                                           std::span<const double> t_grid, const TestFunction& f,
                                           std::span<const Configuration> inits,
                                           const IntegratorConfig& cfg, std::size_t samples) {
  if (inits.empty()) throw input_error("uniqueness_demo: need initial conditions");
  std::vector<UniquenessRow> rows;
  for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
    const double t = t_grid[ti];
    UniquenessRow row;
    row.t = t;
    row.box_n = n_of_t(rho, t);
    const GibbsSpec spec(model, Box(row.box_n, model.dim()), Configuration::zero());
    for (std::size_t ii = 0; ii < inits.size(); ++ii) {
      IntegratorConfig c = cfg;
      // decorrelate the (t, init) cells while keeping the run reproducible
      c.seed = splitmix64(cfg.seed ^ (0x9E37u + ti * 1024 + ii));
      const auto est = semigroup_estimate(spec, f, inits[ii], t, c, samples);
      row.estimates.push_back(est.estimate);
      row.std_errors.push_back(est.std_error);
    }
    row.max_gap = 0.0;
    for (std::size_t a = 0; a < row.estimates.size(); ++a) {
      for (std::size_t b = a + 1; b < row.estimates.size(); ++b) {
        const double gap = std::abs(row.estimates[a] - row.estimates[b]);
        if (gap >= row.max_gap) {
          row.max_gap = gap;
          row.gap_std_error = std::hypot(row.std_errors[a], row.std_errors[b]);
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gibbslab
