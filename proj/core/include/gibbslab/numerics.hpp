#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace gibbslab {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Neumaier-compensated accumulator; result() is exact to ~1 ulp of the sum.
class CompensatedSum {
 public:
  void add(double x) {
    double t = s_ + x;
    if (std::abs(s_) >= std::abs(x))
      c_ += (s_ - t) + x;
    else
      c_ += (x - t) + s_;
    s_ = t;
  }
  double result() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.result();
}

// log(1 + e^t), stable for any t.
inline double log1p_exp(double t) {
  if (t > 0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

// Streaming log-sum-exp: log(sum of e^{x_k}) without leaving the log domain.
class LogSumAccumulator {
 public:
  void add(double logv) {
    if (logv == kNegInf) return;
    if (logv <= max_) {
      sum_ += std::exp(logv - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - logv) + 1.0;
      max_ = logv;
    }
  }
  double log_sum() const {
    if (max_ == kNegInf) return kNegInf;
    return max_ + std::log(sum_);
  }

 private:
  double max_ = kNegInf;
  double sum_ = 0.0;
};

inline double log_sum_exp(std::span<const double> logs) {
  LogSumAccumulator acc;
  for (double v : logs) acc.add(v);
  return acc.log_sum();
}

// log(e^a - e^b) for a >= b.
inline double log_diff_exp(double a, double b) {
  if (b == kNegInf) return a;
  if (a == b) return kNegInf;
  return a + std::log1p(-std::exp(b - a));
}

inline double poly_eval(std::span<const double> coeffs_low_to_high, double x) {
  double r = 0.0;
  for (auto it = coeffs_low_to_high.rbegin(); it != coeffs_low_to_high.rend(); ++it)
    r = r * x + *it;
  return r;
}

inline double sqr(double x) { return x * x; }

}  // namespace gibbslab
