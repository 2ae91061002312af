// gibbslab: experiment runner for the unbounded-spin lattice laboratory.
//
// Subcommands: weights, simulate, couple, uniq-demo, entropy, recursion,
// solve-k, p-growth, criterion, scaling, gap. Each takes a JSON config
// (--config) whose fields individual flags override; outputs are CSV plus a
// small manifest sidecar with the config hash and wall time.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gibbslab/beckner.hpp"
#include "gibbslab/density.hpp"
#include "gibbslab/dynamics.hpp"
#include "gibbslab/entropy.hpp"
#include "gibbslab/model.hpp"
#include "gibbslab/weights.hpp"

#include "csv.hpp"

using nlohmann::json;
using namespace gibbslab;

namespace {

constexpr const char* kVersion = "0.1.0";

// exit codes, one per failure class (sysexits-flavored)
constexpr int kExitUsage = 64;       // unknown subcommand / bad invocation
constexpr int kExitParameter = 65;   // invalid parameter or domain violation
constexpr int kExitNoInput = 66;     // missing input file
constexpr int kExitCantCreate = 73;  // unwritable output
constexpr int kExitSoftware = 70;    // unexpected internal failure

struct CliError {
  int code;
  std::string kind;
  std::string msg;
};

[[noreturn]] void fail(int code, const std::string& kind, const std::string& msg) {
  throw CliError{code, kind, msg};
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct RunContext {
  json config;  // merged config (file + flag overrides)
  std::string out_path;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  double num(const std::string& key, std::optional<double> def = {}) const {
    if (config.contains(key)) return config.at(key).get<double>();
    if (def) return *def;
    fail(kExitParameter, "parameter", "missing required parameter '" + key + "'");
  }
  std::int64_t integer(const std::string& key, std::optional<std::int64_t> def = {}) const {
    if (config.contains(key)) return config.at(key).get<std::int64_t>();
    if (def) return *def;
    fail(kExitParameter, "parameter", "missing required parameter '" + key + "'");
  }
  std::string str(const std::string& key, std::optional<std::string> def = {}) const {
    if (config.contains(key)) return config.at(key).get<std::string>();
    if (def) return *def;
    fail(kExitParameter, "parameter", "missing required parameter '" + key + "'");
  }
  std::vector<double> num_list(const std::string& key, std::vector<double> def = {}) const {
    if (!config.contains(key)) return def;
    return config.at(key).get<std::vector<double>>();
  }
  std::vector<int> int_list(const std::string& key, std::vector<int> def = {}) const {
    if (!config.contains(key)) return def;
    return config.at(key).get<std::vector<int>>();
  }

  void write_manifest(const std::string& subcommand) const {
    const auto wall =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    json m;
    m["subcommand"] = subcommand;
    m["config_hash"] = fnv1a64(config.dump());
    m["version"] = kVersion;
    m["wall_ms"] = wall;
    m["out"] = out_path;
    std::ofstream mf(out_path + ".manifest.json");
    if (mf) mf << m.dump(2) << "\n";
  }
};

ModelSpec model_from_context(const RunContext& ctx) {
  if (ctx.config.contains("model_file")) {
    const std::string path = ctx.config.at("model_file").get<std::string>();
    std::ifstream probe(path);
    if (!probe) fail(kExitNoInput, "io", "model file not found: '" + path + "'");
    return load_model_file(path);
  }
  if (ctx.config.contains("model")) return parse_model_json(ctx.config.at("model").dump());
  fail(kExitParameter, "parameter", "config needs 'model' or 'model_file'");
}

IntegratorConfig integrator_from_context(const RunContext& ctx) {
  IntegratorConfig cfg;
  cfg.dt = ctx.num("dt", 1e-3);
  cfg.horizon = ctx.num("T", 1.0);
  cfg.noise_scale = ctx.num("noise_scale", 1.0);
  cfg.seed = static_cast<std::uint64_t>(ctx.integer("seed", 0));
  cfg.workers = static_cast<int>(ctx.integer("workers", 1));
  return cfg;
}

Configuration config_from_json(const json& j) {
  if (j.is_number()) return Configuration::constant(j.get<double>());
  if (j.is_object() && j.contains("constant"))
    return Configuration::constant(j.at("constant").get<double>());
  if (j.is_object() && j.contains("sites")) {
    Configuration c = Configuration::zero();
    for (const auto& e : j.at("sites")) {
      Site s{};
      const auto& off = e.at("site");
      for (std::size_t k = 0; k < off.size() && k < 4; ++k) s.c[k] = off[k].get<int>();
      c.set(s, e.at("value").get<double>());
    }
    return c;
  }
  fail(kExitParameter, "parameter", "bad configuration literal in config");
}

WeightTable table_from_context(const RunContext& ctx, const ModelSpec& model) {
  const double sp = ctx.num("sigma_prime",
                            0.5 * (model.interaction().sigma() + model.potential().convexity_floor));
  const int radius = static_cast<int>(ctx.integer("radius", 64));
  const double tol = ctx.num("tail_tol", 1e-10);
  return compute_weight_table(model.interaction(), sp, radius, tol);
}

BirthDeathChain chain_from_context(const RunContext& ctx) {
  if (ctx.config.contains("chain_file")) {
    // chain dump format: state, log_weight, b, d per row (header line expected)
    const std::string path = ctx.config.at("chain_file").get<std::string>();
    std::ifstream in(path);
    if (!in) fail(kExitNoInput, "io", "chain file not found: '" + path + "'");
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> lb, ld;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ss(line);
      long state;
      double lw, b, d;
      if (!(ss >> state >> lw >> b >> d))
        fail(kExitParameter, "parameter", "bad chain file row: '" + line + "'");
      lb.push_back(std::log(b));
      ld.push_back(d > 0 ? std::log(d) : kNegInf);
    }
    return BirthDeathChain(std::move(lb), std::move(ld));
  }
  const int d_dim = static_cast<int>(ctx.integer("d_dim", 3));
  const int N = static_cast<int>(ctx.integer("N", 8));
  return toy_chain(d_dim, N);
}

void dump_chain(const BirthDeathChain& chain, const std::string& path) {
  tools::CsvWriter csv(path, {"state", "log_weight", "b", "d"});
  for (int x = 0; x <= chain.top(); ++x) {
    csv.row({static_cast<double>(x), chain.log_mu(x), chain.birth(x),
             x >= 1 ? chain.death(x) : 0.0});
  }
}

// ---- subcommand bodies ----

void run_weights(RunContext& ctx) {
  const ModelSpec model = model_from_context(ctx);
  const WeightTable table = table_from_context(ctx, model);
  const DecayFit fit = fit_decay(table);
  const DominationReport dom = check_domination(table, model.interaction());

  tools::CsvWriter csv(ctx.out_path, {"i", "alpha", "bound"});
  const auto shells = table.shell_profile();
  for (std::size_t r = 0; r < shells.size(); ++r) {
    csv.row({static_cast<double>(r), shells[r],
             fit.c_alpha * std::exp(-fit.d_alpha * static_cast<double>(r))});
  }
  std::printf("alpha(0)=%.17g c_alpha=%.17g d_alpha=%.17g orders=%d\n", table.at(Site{}),
              fit.c_alpha, fit.d_alpha, table.orders());
  std::printf("domination: sigma'=%s (max excess %.3e), sigma=%s (max excess %.3e)\n",
              dom.sigma_prime_holds ? "holds" : "FAILS", dom.max_excess_sigma_prime,
              dom.sigma_holds ? "holds" : "fails", dom.max_excess_sigma);
}

void run_simulate(RunContext& ctx) {
  const ModelSpec model = model_from_context(ctx);
  const int box_n = static_cast<int>(ctx.integer("box_n", 1));
  const GibbsSpec spec(model, Box(box_n, model.dim()),
                       ctx.config.contains("boundary")
                           ? config_from_json(ctx.config.at("boundary"))
                           : Configuration::zero());
  const Configuration init = ctx.config.contains("init")
                                 ? config_from_json(ctx.config.at("init"))
                                 : Configuration::zero();
  IntegratorConfig cfg = integrator_from_context(ctx);
  cfg.record_times = ctx.num_list("record", {cfg.horizon});
  const auto samples = static_cast<std::size_t>(ctx.integer("samples", 1000));
  const TrajectoryEnsemble ens = simulate(spec, init, cfg, samples);

  // summary per (time, site): mean and std error
  tools::CsvWriter csv(ctx.out_path, {"t", "site_index", "mean", "std_error"});
  for (std::size_t ti = 0; ti < ens.record_times().size(); ++ti) {
    for (std::size_t si = 0; si < spec.box.size(); ++si) {
      const auto series = ens.site_series(ti, si);
      double m = 0;
      for (double v : series) m += v;
      m /= static_cast<double>(series.size());
      double var = 0;
      for (double v : series) var += (v - m) * (v - m);
      var = series.size() > 1 ? var / static_cast<double>(series.size() - 1) : 0.0;
      csv.row({ens.record_times()[ti], static_cast<double>(si), m,
               std::sqrt(var / static_cast<double>(series.size()))});
    }
  }
}

void run_couple(RunContext& ctx) {
  const ModelSpec model = model_from_context(ctx);
  const WeightTable table = table_from_context(ctx, model);
  const int m_outer = static_cast<int>(ctx.integer("m_outer", 8));
  std::vector<int> inner = ctx.int_list("n_inner", {2, 3, 4, 5, 6, 7});
  const double t = ctx.num("t", 1.0);
  IntegratorConfig cfg = integrator_from_context(ctx);
  const auto samples = static_cast<std::size_t>(ctx.integer("samples", 2000));
  const Configuration init = ctx.config.contains("init")
                                 ? config_from_json(ctx.config.at("init"))
                                 : Configuration::zero();

  tools::CsvWriter csv(ctx.out_path, {"t", "n_inner", "m_outer", "discrepancy", "std_error"});
  const GibbsSpec outer(model, Box(m_outer, model.dim()), Configuration::zero());
  std::vector<CouplingPoint> pts;
  for (int n : inner) {
    const GibbsSpec innerSpec(model, Box(n, model.dim()), Configuration::zero());
    const auto est = coupled_discrepancy(innerSpec, outer, init, t, table, cfg, samples);
    csv.row({t, static_cast<double>(n), static_cast<double>(m_outer), est.discrepancy,
             est.std_error});
    pts.push_back({t, static_cast<double>(n), est.discrepancy});
  }
  std::vector<double> ns, logd;
  for (const auto& p : pts) {
    if (p.discrepancy > 0) {
      ns.push_back(p.box_n);
      logd.push_back(std::log(p.discrepancy));
    }
  }
  if (ns.size() >= 2) {
    const auto lf = fit_line(ns, logd);
    std::printf("log-discrepancy slope in n: %.6g (d'_alpha=%.6g)\n", lf.slope, -lf.slope);
  }
}

void run_uniq_demo(RunContext& ctx) {
  const ModelSpec model = model_from_context(ctx);
  const double rho = ctx.num("rho", 1.0);
  const std::vector<double> t_grid = ctx.num_list("t_grid", {1.0, 2.0, 4.0, 6.0});
  const TestFunction f = make_test_function(ctx.str("f", "tanh:0"));
  IntegratorConfig cfg = integrator_from_context(ctx);
  const auto samples = static_cast<std::size_t>(ctx.integer("samples", 20000));

  std::vector<Configuration> inits;
  if (ctx.config.contains("inits")) {
    for (const auto& j : ctx.config.at("inits")) inits.push_back(config_from_json(j));
  } else {
    inits = {Configuration::zero(), Configuration::constant(2.0), Configuration::constant(-2.0)};
  }

  // the critical constant of the box-growth schedule, reported not consumed
  const double d_tmp = ctx.num("d_tmp", 2.0);
  const double dv = model.potential().growth_exponent;
  const double c_crit = 2.0 / (rho * (model.dim() + d_tmp * dv));
  std::printf("critical constant: 2/(rho (d + d_tmp d_V)) = %.17g\n", c_crit);

  const auto rows = uniqueness_demo(model, rho, t_grid, f, inits, cfg, samples);
  std::vector<std::string> header = {"t", "n_of_t"};
  for (std::size_t i = 0; i < inits.size(); ++i) {
    header.push_back("estimate_" + std::to_string(i));
    header.push_back("std_error_" + std::to_string(i));
  }
  header.push_back("max_gap");
  header.push_back("gap_std_error");
  tools::CsvWriter csv(ctx.out_path, header);
  for (const auto& r : rows) {
    std::vector<double> row = {r.t, static_cast<double>(r.box_n)};
    for (std::size_t i = 0; i < r.estimates.size(); ++i) {
      row.push_back(r.estimates[i]);
      row.push_back(r.std_errors[i]);
    }
    row.push_back(r.max_gap);
    row.push_back(r.gap_std_error);
    csv.row(row);
  }
}

void run_entropy(RunContext& ctx) {
  const ModelSpec model = model_from_context(ctx);
  const GibbsSpec spec(model, Box(0, model.dim()), Configuration::zero());
  const Configuration init = ctx.config.contains("init")
                                 ? config_from_json(ctx.config.at("init"))
                                 : Configuration::constant(1.5);
  const std::vector<double> t_grid = ctx.num_list("t_grid", {0.5, 1.0, 1.5, 2.0, 2.5, 3.0});
  const std::vector<int> p_list = ctx.int_list("p_list", {1, 2});
  IntegratorConfig cfg = integrator_from_context(ctx);
  const auto samples = static_cast<std::size_t>(ctx.integer("samples", 100000));

  const EntropyCurve curve = entropy_decay_curve(spec, init, t_grid, cfg, samples, p_list);
  std::vector<std::string> header = {"t", "H", "std_error", "bias_budget"};
  for (int p : p_list) header.push_back("H_" + std::to_string(p));
  tools::CsvWriter csv(ctx.out_path, header);
  for (const auto& r : curve.records) {
    std::vector<double> row = {r.t, r.entropy, r.std_error, r.bias_budget};
    for (int p : p_list) row.push_back(r.p_entropy.at(p));
    csv.row(row);
  }
  std::printf("fitted entropy-decay slope: %.6g (over %d usable points)\n", curve.fitted_slope,
              curve.points_used);
}

void run_recursion(RunContext& ctx) {
  RecursionSpec spec;
  spec.c = ctx.num("c", 2.0);
  spec.v0 = ctx.num("v0", 1.0);
  spec.steps = static_cast<int>(ctx.integer("steps", 100));
  const RecursionReport rep = decay_recursion(spec);
  tools::CsvWriter csv(ctx.out_path,
                       {"k", "v", "nominal_bound", "nominal_ok", "contraction_bound",
                        "contraction_ok"});
  const double excess = std::max(spec.v0 - rep.x_e, 0.0);
  double np = 1.0, cp = 1.0;
  csv.row({0, spec.v0, spec.v0, 1, spec.v0, 1});
  for (std::size_t k = 1; k < rep.v.size(); ++k) {
    np *= rep.nominal_factor;
    cp *= rep.contraction_factor;
    csv.row({static_cast<double>(k), rep.v[k], rep.x_e + np * excess,
             rep.nominal_ok[k - 1] ? 1.0 : 0.0, rep.x_e + cp * excess,
             rep.contraction_ok[k - 1] ? 1.0 : 0.0});
  }
  std::printf("x_e=%.17g nominal_all_ok=%d contraction_all_ok=%d\n", rep.x_e,
              rep.nominal_all_ok ? 1 : 0, rep.contraction_all_ok ? 1 : 0);
}

void run_solve_k(RunContext& ctx) {
  const double a = ctx.num("a", 0.5);
  const double C_a = ctx.num("C_a", 1.0);
  std::vector<double> ts = ctx.num_list("t_grid", {});
  if (ts.empty()) ts.push_back(ctx.num("t"));
  tools::CsvWriter csv(ctx.out_path, {"t", "a", "C_a", "K", "residual", "threshold_t"});
  for (double t : ts) {
    const KSolution sol = solve_K(t, a, C_a);
    csv.row({t, a, C_a, sol.K, sol.residual, sol.threshold_t});
  }
}

void run_p_growth(RunContext& ctx) {
  const ModelSpec model = model_from_context(ctx);
  const Configuration init = ctx.config.contains("init")
                                 ? config_from_json(ctx.config.at("init"))
                                 : Configuration::constant(2.5);
  const std::vector<int> n_grid = ctx.int_list("n_grid", {4, 6, 8, 12});
  const std::vector<int> p_grid = ctx.int_list("p_grid", {1, 2, 3});
  const double t = ctx.num("t", 1.0);
  IntegratorConfig cfg = integrator_from_context(ctx);
  const auto samples = static_cast<std::size_t>(ctx.integer("samples", 40000));

  const PGrowthResult res =
      measure_p_entropy_growth(model, init, n_grid, t, p_grid, cfg, samples);
  std::vector<std::string> header = {"n", "sites", "H", "linearity_corr"};
  for (int p : p_grid) header.push_back("H_" + std::to_string(p));
  tools::CsvWriter csv(ctx.out_path, header);
  for (const auto& r : res.rows) {
    std::vector<double> row = {static_cast<double>(r.box_n), static_cast<double>(r.sites),
                               r.entropy, r.linearity_corr};
    for (int p : p_grid) row.push_back(r.p_entropy.at(p));
    csv.row(row);
  }
  std::printf("measured degree (p=1): %.6g\n", res.degree);
  for (const auto& [p, d] : res.normalized_degree)
    std::printf("  p=%d: slope of H_p/p=%.6g, slope of H_p^(1/p)=%.6g\n", p,
                res.degree_by_p.at(p), d);
}

void run_criterion(RunContext& ctx) {
  const BirthDeathChain chain = chain_from_context(ctx);
  if (ctx.config.contains("dump_chain"))
    dump_chain(chain, ctx.config.at("dump_chain").get<std::string>());
  const double a = ctx.num("a", 0.0);
  const std::string policy = ctx.str("probe", "auto");
  CriterionResult res;
  if (policy == "auto") {
    res = beckner_exact_inf(chain, a);
  } else {
    const auto probes = make_probe_set(
        chain.top(), policy == "full" ? ProbePolicy::full : ProbePolicy::geometric);
    res = muckenhoupt_beckner(chain, a, probes);
  }
  tools::CsvWriter csv(ctx.out_path, {"i", "log_B_plus", "log_B_minus"});
  for (std::size_t k = 0; k < res.probes.size(); ++k)
    csv.row({static_cast<double>(res.probes[k]), res.log_b_plus[k], res.log_b_minus[k]});
  std::printf("B=%.17g (log %.17g)  B_wedge=%.17g\n", res.B(), res.log_B_two_sided,
              res.B_wedge());
}

void run_scaling(RunContext& ctx) {
  const int d_dim = static_cast<int>(ctx.integer("d_dim", 3));
  const double a = ctx.num("a", 0.0);
  const std::vector<int> N_grid = ctx.int_list("N_grid", {4, 8, 16, 32});
  const ScalingResult res = scaling_study(d_dim, a, N_grid);
  tools::CsvWriter csv(ctx.out_path,
                       {"N", "a", "B", "log_B", "predicted_exponent", "slope"});
  for (const auto& r : res.rows)
    csv.row({static_cast<double>(r.N), a, std::exp(r.log_B), r.log_B, res.predicted_exponent,
             res.slope});
  std::printf("slope=%.6g predicted=%.6g residual=%.3g\n", res.slope, res.predicted_exponent,
              res.fit_residual);
}

void run_gap(RunContext& ctx) {
  const BirthDeathChain chain = chain_from_context(ctx);
  if (ctx.config.contains("dump_chain"))
    dump_chain(chain, ctx.config.at("dump_chain").get<std::string>());
  const double gap = spectral_gap(chain);
  tools::CsvWriter csv(ctx.out_path, {"states", "gap", "poincare_constant"});
  csv.row({static_cast<double>(chain.states()), gap, 1.0 / gap});
  std::printf("gap=%.17g poincare=%.17g\n", gap, 1.0 / gap);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gibbslab: lattice Glauber-Langevin and birth-death inequality laboratory"};
  app.require_subcommand(0, 1);
  app.allow_extras(false);

  std::string config_path, out_path;
  std::int64_t seed = -1;
  int workers = -1;

  const std::vector<std::string> subnames = {"weights",   "simulate", "couple", "uniq-demo",
                                             "entropy",   "recursion", "solve-k", "p-growth",
                                             "criterion", "scaling",  "gap"};
  for (const auto& name : subnames) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON experiment config");
    sub->add_option("--out", out_path, "output CSV path");
    sub->add_option("--seed", seed, "master seed (overrides config)");
    sub->add_option("--workers", workers, "worker count (overrides config)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "error code=usage exit=%d msg=\"%s\"\n", kExitUsage, e.what());
    return kExitUsage;
  }

  const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
  if (!sub) {
    std::fprintf(stderr, "error code=usage exit=%d msg=\"missing subcommand\"\n", kExitUsage);
    return kExitUsage;
  }

  try {
    RunContext ctx;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) fail(kExitNoInput, "io", "config file not found: '" + config_path + "'");
      try {
        in >> ctx.config;
      } catch (const json::exception& e) {
        fail(kExitParameter, "parameter", std::string("bad config JSON: ") + e.what());
      }
    }
    if (!ctx.config.is_object()) ctx.config = json::object();
    if (seed >= 0) ctx.config["seed"] = seed;
    if (workers > 0) ctx.config["workers"] = workers;
    if (const char* env = std::getenv("GIBBSLAB_WORKERS"); env && workers <= 0)
      ctx.config["workers"] = std::atoi(env);
    if (!out_path.empty()) ctx.config["out"] = out_path;
    ctx.out_path = ctx.config.value("out", std::string("out.csv"));

    const std::string name = sub->get_name();
    if (name == "weights") run_weights(ctx);
    else if (name == "simulate") run_simulate(ctx);
    else if (name == "couple") run_couple(ctx);
    else if (name == "uniq-demo") run_uniq_demo(ctx);
    else if (name == "entropy") run_entropy(ctx);
    else if (name == "recursion") run_recursion(ctx);
    else if (name == "solve-k") run_solve_k(ctx);
    else if (name == "p-growth") run_p_growth(ctx);
    else if (name == "criterion") run_criterion(ctx);
    else if (name == "scaling") run_scaling(ctx);
    else if (name == "gap") run_gap(ctx);
    ctx.write_manifest(name);
    return 0;
  } catch (const CliError& e) {
    std::fprintf(stderr, "error code=%s exit=%d msg=\"%s\"\n", e.kind.c_str(), e.code,
                 e.msg.c_str());
    return e.code;
  } catch (const input_error& e) {
    std::fprintf(stderr, "error code=input exit=%d msg=\"%s\"\n", kExitParameter, e.what());
    return kExitParameter;
  } catch (const domain_error& e) {
    std::fprintf(stderr, "error code=domain exit=%d msg=\"%s\"\n", kExitParameter, e.what());
    return kExitParameter;
  } catch (const fit_error& e) {
    std::fprintf(stderr, "error code=fit exit=%d msg=\"%s\"\n", kExitParameter, e.what());
    return kExitParameter;
  } catch (const divergence_error& e) {
    std::fprintf(stderr, "error code=divergence exit=%d msg=\"%s\"\n", kExitParameter, e.what());
    return kExitParameter;
  } catch (const resolution_error& e) {
    // covers unwritable outputs and over-budget grids
    std::fprintf(stderr, "error code=resolution exit=%d msg=\"%s\"\n", kExitCantCreate, e.what());
    return kExitCantCreate;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error code=internal exit=%d msg=\"%s\"\n", kExitSoftware, e.what());
    return kExitSoftware;
  }
}
