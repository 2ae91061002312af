#pragma once

#include <cmath>
#include <span>

#include "gibbslab/errors.hpp"

namespace gibbslab {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double corr = 0.0;          // Pearson r of (x, y)
  double max_residual = 0.0;  // max |y - (intercept + slope x)|
};

inline LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  if (n != ys.size() || n < 2) throw fit_error("fit_line: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  const double det = n * sxx - sx * sx;
  if (det <= 0 || !std::isfinite(det)) throw fit_error("fit_line: degenerate abscissae");
  LineFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  const double vy = n * syy - sy * sy;
  f.corr = vy > 0 ? (n * sxy - sx * sy) / std::sqrt(det * vy) : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::abs(ys[i] - (f.intercept + f.slope * xs[i]));
    if (r > f.max_residual) f.max_residual = r;
  }
  return f;
}

inline double pearson_corr(std::span<const double> xs, std::span<const double> ys) {
  return fit_line(xs, ys).corr;
}

// Least squares for y ~ c0 + c1*u + c2*v (two covariates, normal equations).
struct PlaneFit {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double max_residual = 0.0;
};

inline PlaneFit fit_plane(std::span<const double> us, std::span<const double> vs,
                          std::span<const double> ys) {
  const std::size_t n = us.size();
  if (n != vs.size() || n != ys.size() || n < 3) throw fit_error("fit_plane: need >= 3 points");
  double a[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  double b[3] = {0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const double row[3] = {1.0, us[i], vs[i]};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] += row[r] * row[c];
      b[r] += row[r] * ys[i];
    }
  }
  // Cramer on the 3x3 normal matrix
  auto det3 = [](const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const double d = det3(a);
  if (std::abs(d) < 1e-12 || !std::isfinite(d)) throw fit_error("fit_plane: degenerate grid");
  PlaneFit f;
  double m[3][3];
  double* out[3] = {&f.c0, &f.c1, &f.c2};
  for (int k = 0; k < 3; ++k) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] = (c == k) ? b[r] : a[r][c];
    *out[k] = det3(m) / d;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::abs(ys[i] - (f.c0 + f.c1 * us[i] + f.c2 * vs[i]));
    if (r > f.max_residual) f.max_residual = r;
  }
  return f;
}

}  // namespace gibbslab
