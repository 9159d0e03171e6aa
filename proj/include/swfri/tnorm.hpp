#pragma once

// Sugeno-Weber t-norm
//
//   T(x, y) = max{(x + y - 1 + lambda*x*y) / (1 + lambda), 0},  lambda > -1
//
// and its two residuals used by the solver. T is evaluated in the
// algebraically equivalent form x*y - (1-x)*(1-y)/(1+lambda), which makes
// T(x, 1) == x, T(x, y) == T(y, x) and monotonicity hold exactly in
// floating point (every step is a monotone correctly-rounded operation).

#include <algorithm>

#include "swfri/errors.hpp"

namespace swfri {

class Lambda {
 public:
  explicit Lambda(double value) : value_(value) {
    // Written as !(v > -1) so that NaN is rejected too.
    if (!(value > -1.0)) throw InvalidLambda(value);
  }

  double value() const noexcept { return value_; }
  // 1 + lambda, strictly positive.
  double shifted() const noexcept { return 1.0 + value_; }

  friend bool operator==(const Lambda&, const Lambda&) = default;

 private:
  double value_;
};

inline double tnorm(Lambda lambda, double x, double y) noexcept {
  const double t = x * y - ((1.0 - x) * (1.0 - y)) / lambda.shifted();
  return std::clamp(t, 0.0, 1.0);
}

// Largest u in [0,1] with T(a, u) <= b.
// 1 + lambda*a > 0 for every a in [0,1] because 1 + lambda*a >= min(1, 1 + lambda).
inline double residual_leq(Lambda lambda, double a, double b) noexcept {
  // The closed form is analytically 1 at a == b but may round below it.
  if (a <= b) return 1.0;
  const double u = (lambda.shifted() * b + 1.0 - a) / (1.0 + lambda.value() * a);
  return std::clamp(u, 0.0, 1.0);
}

// Smallest v in [0,1] with T(d, v) >= b. Requires d >= b.
inline double residual_geq(Lambda lambda, double d, double b) {
  if (d < b) throw UnsatisfiableThreshold(d, b);
  if (b == 0.0) return 0.0;
  const double v = (lambda.shifted() * b + 1.0 - d) / (1.0 + lambda.value() * d);
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace swfri
