// Merged evaluation form  f(z) = constant + Re P(z) + sum_j coef_j ln|z - a_j|
// shared by the circle and planar quadrature engines.  coef > 0 terms dive to
// -inf at their atom, coef < 0 terms blow up to +inf.
#pragma once

#include <vector>

#include "nevlab/model.hpp"

namespace nevlab {

struct LogTerm {
  cplx location;
  double coef;
};

enum class XForm { plain, pos_part, abs_value };

inline double apply_xform(XForm t, double v) {
  switch (t) {
    case XForm::plain:
      return v;
    case XForm::pos_part:
      return v > 0.0 ? v : 0.0;
    case XForm::abs_value:
      return v < 0.0 ? -v : v;
  }
  return v;
}

class LogSumFn {
 public:
  LogSumFn() = default;
  LogSumFn(double constant, Polynomial poly, std::vector<LogTerm> terms)
      : constant_(constant), poly_(std::move(poly)), terms_(std::move(terms)) {}

  static LogSumFn from(const LogPotentialFn& v);
  static LogSumFn from(const DeltaSubharmonicFn& U);
  /// constant ln(2R) minus a unit log pole at z: the Lemma-1 kernel.
  static LogSumFn kernel(cplx z, double R);
  static LogSumFn constant_fn(double c) { return LogSumFn(c, Polynomial{}, {}); }

  double constant() const { return constant_; }
  const Polynomial& poly() const { return poly_; }
  const std::vector<LogTerm>& terms() const { return terms_; }

  /// Pointwise value with +-inf at atoms (bit-identical shared locations are
  /// consolidated at construction, so the sign is well defined).
  double value(cplx z) const;

  LogSumFn negated() const;

  /// sup |d/dz of the smooth (polynomial) part| on |z| <= radius.
  double poly_lipschitz(double radius) const { return poly_.derivative_bound(radius); }

 private:
  double constant_ = 0.0;
  Polynomial poly_;
  std::vector<LogTerm> terms_;
};

}  // namespace nevlab
