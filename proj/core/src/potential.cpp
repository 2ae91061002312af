#include "gibbslab/potential.hpp"

#include <cmath>

namespace gibbslab {

Potential Potential::gaussian() {
  Potential p;
  p.name = "gaussian";
  p.eval = [](double x) { return 0.5 * x * x; };
  p.deriv = [](double x) { return x; };
  p.second_deriv = [](double) { return 1.0; };
  p.growth_exponent = 2.0;
  p.growth_a = 0.5;
  p.growth_b = 0.0;
  p.convexity_floor = 1.0;
  p.grad_square_coeff = 0.5;
  return p;
}

Potential Potential::double_well(double a, double b) {
  if (a <= 0) throw input_error("double_well: a must be > 0");
  Potential p;
  p.name = "double_well";
  p.eval = [a, b](double x) { return a * x * x * x * x - b * x * x; };
  p.deriv = [a, b](double x) { return 4 * a * x * x * x - 2 * b * x; };
  p.second_deriv = [a, b](double x) { return 12 * a * x * x - 2 * b; };
  p.growth_exponent = 4.0;
  p.growth_a = a;
  // |ax^4 - bx^2| <= a x^4 + b^2/(4a): max of bx^2 - ax^4.
  p.growth_b = b > 0 ? b * b / (4 * a) : 0.0;
  p.convexity_floor = 1.0;
  p.grad_square_coeff = 0.5;
  return p;
}

Potential Potential::quartic_plus_quadratic(double a, double c) {
  if (a < 0 || c <= 0) throw input_error("quartic_plus_quadratic: need a >= 0, c > 0");
  Potential p;
  p.name = "quartic_plus_quadratic";
  p.eval = [a, c](double x) { return a * x * x * x * x + c * x * x; };
  p.deriv = [a, c](double x) { return 4 * a * x * x * x + 2 * c * x; };
  p.second_deriv = [a, c](double x) { return 12 * a * x * x + 2 * c; };
  p.growth_exponent = a > 0 ? 4.0 : 2.0;
  p.growth_a = a > 0 ? a + c : c;  // a x^4 + c x^2 <= (a+c)max(|x|^4,1) + c
  p.growth_b = c;
  p.convexity_floor = 2 * c;
  p.grad_square_coeff = 0.5;
  return p;
}

void validate_potential(const Potential& p) {
  if (!p.eval || !p.deriv || !p.second_deriv)
    throw input_error("Potential: eval/deriv/second_deriv must all be set");
  if (!(p.growth_exponent > 0)) throw input_error("Potential: growth exponent must be > 0");
  if (!(p.convexity_floor > 0)) throw input_error("Potential: convexity floor must be > 0");
  if (!(p.grad_square_coeff > 0 && p.grad_square_coeff < 1))
    throw input_error("Potential: a'_V must lie in (0,1)");
}

}  // namespace gibbslab
