#pragma once

#include <vector>

#include "gibbslab/potential.hpp"

namespace gibbslab {

struct GridSpec {
  double x_min = -12.0;
  double x_max = 12.0;
  int points = 4801;        // Simpson wants an odd count; even counts are bumped
  double tail_tol = 1e-10;  // max tolerated tail mass outside the grid
};

// Normalized density table of (1/Z) exp(-V(x) - h x) on a uniform grid.
class DensityTable {
 public:
  DensityTable(std::vector<double> x, std::vector<double> pdf, double z, double mean,
               double variance);

  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& pdf() const { return pdf_; }
  double z() const { return z_; }
  double mean() const { return mean_; }
  double variance() const { return variance_; }

  // Inverse CDF by linear interpolation; u in [0,1].
  double quantile(double u) const;

 private:
  std::vector<double> x_;
  std::vector<double> pdf_;
  std::vector<double> cdf_;
  double z_;
  double mean_;
  double variance_;
};

// Quadrature-normalized single-site equilibrium for potential V and external
// field h. Throws resolution_error when the grid does not cover the mass up
// to grid.tail_tol.
DensityTable single_site_measure(const Potential& pot, double external_field,
                                 const GridSpec& grid = {});

}  // namespace gibbslab
