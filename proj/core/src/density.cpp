#include "gibbslab/density.hpp"

#include <algorithm>
#include <cmath>

#include "gibbslab/errors.hpp"
#include "gibbslab/numerics.hpp"

namespace gibbslab {

DensityTable::DensityTable(std::vector<double> x, std::vector<double> pdf, double z, double mean,
                           double variance)
    : x_(std::move(x)), pdf_(std::move(pdf)), z_(z), mean_(mean), variance_(variance) {
  // trapezoid CDF, pinned to [0,1]
  cdf_.resize(x_.size());
  cdf_[0] = 0.0;
  const double h = x_[1] - x_[0];
  CompensatedSum acc;
  for (std::size_t i = 1; i < x_.size(); ++i) {
    acc.add(0.5 * h * (pdf_[i - 1] + pdf_[i]));
    cdf_[i] = acc.result();
  }
  const double total = cdf_.back();
  for (auto& c : cdf_) c /= total;
}

double DensityTable::quantile(double u) const {
  u = std::clamp(u, 0.0, 1.0);
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.begin()) return x_.front();
  if (it == cdf_.end()) return x_.back();
  const std::size_t i = static_cast<std::size_t>(it - cdf_.begin());
  const double c0 = cdf_[i - 1], c1 = cdf_[i];
  const double w = c1 > c0 ? (u - c0) / (c1 - c0) : 0.0;
  return x_[i - 1] + w * (x_[i] - x_[i - 1]);
}

DensityTable single_site_measure(const Potential& pot, double external_field,
                                 const GridSpec& grid) {
  if (!(grid.x_max > grid.x_min)) throw input_error("single_site_measure: empty grid");
  int n = std::max(grid.points, 5);
  if (n % 2 == 0) ++n;  // Simpson needs an odd point count
  const double h = (grid.x_max - grid.x_min) / (n - 1);

  std::vector<double> x(n), f(n);
  for (int i = 0; i < n; ++i) {
    x[i] = grid.x_min + i * h;
    f[i] = std::exp(-pot(x[i]) - external_field * x[i]);
    if (!std::isfinite(f[i])) throw input_error("single_site_measure: non-finite integrand");
  }

  auto simpson = [&](auto&& weight) {
    CompensatedSum acc;
    for (int i = 0; i < n; ++i) {
      const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      acc.add(w * weight(i));
    }
    return acc.result() * h / 3.0;
  };

  const double z = simpson([&](int i) { return f[i]; });
  if (!(z > 0) || !std::isfinite(z)) throw resolution_error("single_site_measure: Z not finite");

  // Tail estimate: geometric extrapolation of the unnormalized density at both
  // edges. Decay faster than geometric (d_V >= 2) makes this an overestimate.
  const double fmax = *std::max_element(f.begin(), f.end());
  auto edge_tail = [&](double f_edge, double f_inner) {
    if (f_edge <= 0) return 0.0;
    const double r = f_edge / std::max(f_inner, 1e-300);
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return f_edge * h * r / (1.0 - r);
  };
  const double tail = edge_tail(f.front(), f[1]) + edge_tail(f.back(), f[n - 2]);
  if (!(tail / z <= grid.tail_tol) || fmax == f.front() || fmax == f.back())
    throw resolution_error("single_site_measure: grid too narrow for tail tolerance");

  const double m1 = simpson([&](int i) { return x[i] * f[i]; }) / z;
  const double m2 = simpson([&](int i) { return x[i] * x[i] * f[i]; }) / z;

  std::vector<double> pdf(n);
  for (int i = 0; i < n; ++i) pdf[i] = f[i] / z;
  return DensityTable(std::move(x), std::move(pdf), z, m1, m2 - m1 * m1);
}

}  // namespace gibbslab
