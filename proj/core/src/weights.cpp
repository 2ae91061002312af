#include "gibbslab/weights.hpp"

#include <algorithm>
#include <cmath>

#include "gibbslab/errors.hpp"
#include "gibbslab/fit.hpp"
#include "gibbslab/numerics.hpp"

namespace gibbslab {

namespace {

std::size_t ball_index(int dim, int radius, int side, const Site& s) {
  std::size_t idx = 0;
  for (int k = 0; k < dim; ++k) idx = idx * side + static_cast<std::size_t>(s.c[k] + radius);
  return idx;
}

Site ball_site(int dim, int radius, int side, std::size_t idx) {
  Site s;
  for (int k = dim - 1; k >= 0; --k) {
    s.c[k] = static_cast<std::int32_t>(idx % side) - radius;
    idx /= side;
  }
  return s;
}

std::size_t checked_ball_size(int dim, int radius) {
  const std::size_t side = static_cast<std::size_t>(2 * radius + 1);
  std::size_t n = 1;
  for (int k = 0; k < dim; ++k) {
    n *= side;
    if (n > (1u << 26)) throw resolution_error("weight table: truncation ball too large");
  }
  return n;
}

}  // namespace

WeightTable::WeightTable(int dim, int radius, double sigma, double sigma_prime, double tail_tol)
    : dim_(dim),
      radius_(radius),
      side_(2 * radius + 1),
      sigma_(sigma),
      sigma_prime_(sigma_prime),
      tail_tol_(tail_tol),
      data_(checked_ball_size(dim, radius), 0.0) {
  if (radius < 0) throw input_error("weight table: radius must be >= 0");
  if (radius > 0x7FF) throw resolution_error("weight table: radius exceeds site coordinate cap");
}

bool WeightTable::in_ball(const Site& s) const {
  for (int k = 0; k < dim_; ++k)
    if (std::abs(s.c[k]) > radius_) return false;
  for (int k = dim_; k < 4; ++k)
    if (s.c[k] != 0) return false;
  return true;
}

double WeightTable::at(const Site& s) const {
  if (!in_ball(s)) return 0.0;
  return data_[ball_index(dim_, radius_, side_, s)];
}

double& WeightTable::slot(const Site& s) { return data_[ball_index(dim_, radius_, side_, s)]; }

Site WeightTable::site_at(std::size_t idx) const { return ball_site(dim_, radius_, side_, idx); }

std::vector<double> WeightTable::shell_profile() const {
  std::vector<double> shells(static_cast<std::size_t>(radius_) + 1, 0.0);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    const int r = site_at(i).linf();
    shells[static_cast<std::size_t>(r)] = std::max(shells[static_cast<std::size_t>(r)], data_[i]);
  }
  return shells;
}

WeightTable compute_weight_table(const Interaction& inter, double sigma_prime, int radius,
                                 double tail_tol) {
  const double sigma = inter.sigma();
  if (!(sigma_prime > sigma))
    throw divergence_error("compute_weight_table: series needs sigma' > sigma");
  if (!(tail_tol > 0)) throw input_error("compute_weight_table: tail_tol must be > 0");
  if (radius < inter.range())
    throw resolution_error("compute_weight_table: radius below interaction range");

  WeightTable table(inter.dim(), radius, sigma, sigma_prime, tail_tol);
  const Site origin{};
  // n = 0 term: delta at the origin
  table.slot(origin) = 1.0;
  // running p^{*n}, kept on the same ball
  std::vector<double> cur(table.ball_size(), 0.0), nxt(table.ball_size(), 0.0);
  std::vector<double>* a = &cur;
  std::vector<double>* b = &nxt;
  (*a)[ball_index(table.dim(), radius, 2 * radius + 1, origin)] = 1.0;

  if (sigma == 0.0) return table;  // only the delta survives

  const double ratio = sigma / sigma_prime;
  double sigma_prime_pow = 1.0;
  int n = 0;
  int support = 0;
  while (true) {
    ++n;
    support += inter.range();
    if (support > radius)
      throw resolution_error("compute_weight_table: radius too small for support growth");
    sigma_prime_pow *= sigma_prime;
    std::fill(b->begin(), b->end(), 0.0);
    for (std::size_t idx = 0; idx < a->size(); ++idx) {
      const double v = (*a)[idx];
      if (v == 0.0) continue;
      const Site s = table.site_at(idx);
      for (const auto& [off, j] : inter.entries()) {
        const Site t = s + off;
        if (!table.in_ball(t)) continue;
        (*b)[ball_index(table.dim(), radius, 2 * radius + 1, t)] += std::abs(j) * v;
      }
    }
    std::swap(a, b);
    for (std::size_t idx = 0; idx < a->size(); ++idx) {
      if ((*a)[idx] != 0.0) table.slot(table.site_at(idx)) += (*a)[idx] / sigma_prime_pow;
    }
    const double tail = std::pow(ratio, n + 1) / (1.0 - ratio);
    if (tail < tail_tol) break;
    if (n > 100000) throw divergence_error("compute_weight_table: series did not converge");
  }
  table.set_orders(n);
  return table;
}

DominationReport check_domination(const WeightTable& table, const Interaction& inter) {
  DominationReport rep;
  const int valid = table.radius() - inter.range();
  for (std::size_t idx = 0; idx < table.ball_size(); ++idx) {
    const Site i = table.site_at(idx);
    if (i.linf() > valid) continue;
    CompensatedSum conv;
    for (const auto& [off, j] : inter.entries()) conv.add(std::abs(j) * table.at(i - off));
    const double c = conv.result();
    rep.max_excess_sigma_prime =
        std::max(rep.max_excess_sigma_prime, c - table.sigma_prime() * table.at(i));
    rep.max_excess_sigma = std::max(rep.max_excess_sigma, c - table.sigma() * table.at(i));
  }
  const double slack = table.sigma_prime() * table.tail_tol() + 1e-14;
  rep.sigma_prime_holds = rep.max_excess_sigma_prime <= slack;
  rep.sigma_holds = rep.max_excess_sigma <= slack;
  return rep;
}

DecayFit fit_decay(const WeightTable& table) {
  const auto shells = table.shell_profile();
  std::vector<double> xs, ys;
  for (std::size_t r = 0; r < shells.size(); ++r) {
    if (shells[r] > 0.0) {
      xs.push_back(static_cast<double>(r));
      ys.push_back(std::log(shells[r]));
    }
  }
  if (xs.size() < 5) throw fit_error("fit_decay: need >= 5 nonzero radial shells");
  const LineFit lf = fit_line(xs, ys);
  DecayFit fit;
  fit.d_alpha = -lf.slope;
  // inflate c so the bound holds pointwise on the table
  double log_c = lf.intercept;
  for (std::size_t idx = 0; idx < table.ball_size(); ++idx) {
    const Site s = table.site_at(idx);
    const double a = table.at(s);
    if (a > 0.0) log_c = std::max(log_c, std::log(a) + fit.d_alpha * s.linf());
  }
  fit.c_alpha = std::exp(log_c);
  return fit;
}

BoundaryWeightTable::BoundaryWeightTable(int dim, int radius, std::vector<double> data)
    : dim_(dim), radius_(radius), side_(2 * radius + 1), data_(std::move(data)) {}

double BoundaryWeightTable::at(const Site& s) const {
  for (int k = 0; k < dim_; ++k)
    if (std::abs(s.c[k]) > radius_) return 0.0;
  for (int k = dim_; k < 4; ++k)
    if (s.c[k] != 0) return 0.0;
  return data_[ball_index(dim_, radius_, side_, s)];
}

BoundaryWeightTable boundary_weight(const WeightTable& table,
                                    const std::function<bool(const Site&)>& contains) {
  std::vector<double> beta(table.ball_size(), 0.0);
  for (std::size_t jdx = 0; jdx < table.ball_size(); ++jdx) {
    const Site j = table.site_at(jdx);
    CompensatedSum acc;
    for (std::size_t idx = 0; idx < table.ball_size(); ++idx) {
      const Site i = table.site_at(idx);
      if (contains(i)) continue;
      const double ai = table.at(i);
      if (ai == 0.0) continue;
      acc.add(ai * table.at(j - i));
    }
    beta[jdx] = acc.result();
  }
  return BoundaryWeightTable(table.dim(), table.radius(), std::move(beta));
}

BoundaryWeightTable boundary_weight(const WeightTable& table, const Box& box) {
  if (box.dim() != table.dim()) throw input_error("boundary_weight: dimension mismatch");
  if (box.n() > table.radius())
    throw resolution_error("boundary_weight: box exceeds truncation ball");
  return boundary_weight(table, [&box](const Site& s) { return box.contains(s); });
}

double alpha_norm(const Configuration& config, const WeightTable& table) {
  CompensatedSum acc;
  for (std::size_t idx = 0; idx < table.ball_size(); ++idx) {
    const Site i = table.site_at(idx);
    const double a = table.at(i);
    if (a == 0.0) continue;
    acc.add(a * sqr(config.at(i)));
  }
  return std::sqrt(acc.result());
}

double beta_norm(const Configuration& config, const BoundaryWeightTable& beta, int dim) {
  CompensatedSum acc;
  const int r = beta.radius();
  const std::size_t n = checked_ball_size(dim, r);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const Site i = ball_site(dim, r, 2 * r + 1, idx);
    const double b = beta.at(i);
    if (b == 0.0) continue;
    acc.add(b * sqr(config.at(i)));
  }
  return std::sqrt(acc.result());
}

}  // namespace gibbslab
