#pragma once

#include <functional>
#include <string>

#include "gibbslab/errors.hpp"

namespace gibbslab {

// Single-spin potential V together with the growth/convexity constants the
// model hypotheses speak about. The constants are data, not something we
// derive from the callables: kappa in particular stands in for inf V1'' of a
// convex-at-infinity decomposition V = V1 + V2 and is supplied per potential.
struct Potential {
  std::string name = "custom";
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
  std::function<double(double)> second_deriv;

  double growth_exponent = 2.0;   // d_V
  double growth_a = 1.0;          // a_V
  double growth_b = 0.0;          // b_V (b'_V is treated as the same constant)
  double convexity_floor = 1.0;   // kappa
  double grad_square_coeff = 0.5; // a'_V in (0,1)

  double operator()(double x) const { return eval(x); }

  // V(x) = x^2/2. kappa = 1 exactly (V'' == 1).
  static Potential gaussian();

  // V(x) = a x^4 - b x^2. The shipped kappa=1 corresponds to splitting off a
  // compactly supported C^2 well around the origin (for a=b=1 the residual
  // V1 can be chosen with inf V1'' = 1).
  static Potential double_well(double a = 1.0, double b = 1.0);

  // V(x) = a x^4 + c x^2 with a >= 0, c > 0; kappa = 2c (V1 = V works).
  static Potential quartic_plus_quadratic(double a, double c);
};

void validate_potential(const Potential& p);

}  // namespace gibbslab
