// Numeric results carrying an absolute error budget, plus a small interval
// helper used to propagate budgets through inequality right-hand sides.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace nevlab {

enum class Method { closed_form, quad1d, quad2d, grid_sup };

/// A computed quantity together with an estimated absolute error bound.
///
/// For quadrature and closed-form results the convention is symmetric: the
/// true value lies in [value - errorBound, value + errorBound].  grid_sup
/// results are one-sided lower bounds: the true sup lies in
/// [value, value + errorBound].
struct ValueWithError {
  double value = 0.0;
  double errorBound = 0.0;
  Method method = Method::closed_form;
};

inline ValueWithError closed_form(double v) {
  return {v, 1e-12 * std::max(1.0, std::fabs(v)), Method::closed_form};
}

inline Method worse(Method a, Method b) { return a < b ? b : a; }

/// Closed interval [lo, hi]; arithmetic is outward-conservative.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double v) { return {v, v}; }
  static Interval symmetric(const ValueWithError& v) {
    return {v.value - v.errorBound, v.value + v.errorBound};
  }
  /// Interval of a one-sided grid_sup result: [value, value + errorBound].
  static Interval lower_bound(const ValueWithError& v) {
    return {v.value, v.value + v.errorBound};
  }

  double mid() const { return 0.5 * (lo + hi); }
  double half() const { return 0.5 * (hi - lo); }

  ValueWithError as_value(Method m) const { return {mid(), half(), m}; }

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
  Interval operator*(const Interval& o) const {
    const double a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
  }
  Interval operator*(double s) const {
    return s >= 0 ? Interval{lo * s, hi * s} : Interval{hi * s, lo * s};
  }
  Interval clamp_nonneg() const { return {std::max(0.0, lo), std::max(0.0, hi)}; }
};

/// ln of a positive interval; lo is floored at a tiny positive value.
inline Interval interval_log(const Interval& x) {
  const double tiny = std::numeric_limits<double>::min();
  return {std::log(std::max(x.lo, tiny)), std::log(std::max(x.hi, tiny))};
}

/// x^(1/q) for x >= 0, q >= 1.
inline Interval interval_root(const Interval& x, double q) {
  const Interval c = x.clamp_nonneg();
  return {std::pow(c.lo, 1.0 / q), std::pow(c.hi, 1.0 / q)};
}

}  // namespace nevlab
