// Domain types: atomic measures and charges, log-potential subharmonic
// functions, differences of subharmonic functions, and meromorphic function
// specifications.  All types are immutable after construction.
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "nevlab/errors.hpp"

namespace nevlab {

using cplx = std::complex<double>;

/// Hard cap on the degree of the harmonic-polynomial part.
inline constexpr int kMaxHarmonicDegree = 16;

/// One weighted point mass.  mass > 0 for measures; either sign for charges
/// (multiplicities of zeros and poles).  mass == 0 is rejected.
struct Atom {
  cplx location;
  double mass;
};

/// Finite list of point masses.  Construction consolidates atoms whose
/// locations are bit-identical (sum of masses; net-zero atoms dropped).
/// No epsilon merging is performed: distinct coordinates stay distinct.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  /// Factory for positive measures: every (consolidated) mass must be > 0.
  static AtomicMeasure positive(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  bool all_positive() const;
  bool integer_masses() const;

  /// Total variation sum |m_1| + ... + |m_n|.
  double total_variation() const;

  AtomicMeasure scaled(double factor) const;

 private:
  std::vector<Atom> atoms_;
};

/// nu^rad(r): total mass in the closed disc of radius r about the origin.
double radial_count(const AtomicMeasure& nu, double r);

/// N_nu(r, R) = integral_r^R nu^rad(t)/t dt in closed form:
/// sum over atoms with |a| <= R of m * ln(R / max(|a|, r)).
/// Requires 0 < r <= R and nonnegative masses.
double integrated_count(const AtomicMeasure& nu, double r, double R);

/// Jordan decomposition of a charge given as (plus - minus): shared locations
/// are netted so that upper and lower live on disjoint supports.
struct ChargeDecomposition {
  AtomicMeasure upper;
  AtomicMeasure lower;
};

ChargeDecomposition jordan_decompose(const AtomicMeasure& plus, const AtomicMeasure& minus);

/// Complex-coefficient polynomial, ascending coefficients, degree <= 16.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coefficients);

  const std::vector<cplx>& coefficients() const { return coef_; }
  bool zero() const { return coef_.empty(); }
  int degree() const { return static_cast<int>(coef_.size()) - 1; }

  cplx eval(cplx z) const;
  double real_part(cplx z) const { return eval(z).real(); }
  cplx at_zero() const { return coef_.empty() ? cplx{0.0, 0.0} : coef_.front(); }

  /// sup |P'(z)| over |z| <= radius, bounded via coefficient sums.
  double derivative_bound(double radius) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial scaled(cplx factor) const;

 private:
  std::vector<cplx> coef_;
};

/// Subharmonic function of the concrete class
///   v(z) = c + Re P(z) + sum_j m_j ln|z - a_j|,  m_j > 0.
/// Its Riesz measure (1/2pi Laplacian) is exactly the atom list.
class LogPotentialFn {
 public:
  LogPotentialFn() = default;
  LogPotentialFn(double constant, Polynomial harmonic_poly, AtomicMeasure riesz);

  double constant() const { return constant_; }
  const Polynomial& harmonic_poly() const { return harmonic_; }
  const AtomicMeasure& riesz() const { return riesz_; }

  /// Pointwise value; -inf exactly at atom locations.
  double value(cplx z) const;

  LogPotentialFn scaled(double factor) const;

 private:
  double constant_ = 0.0;
  Polynomial harmonic_;
  AtomicMeasure riesz_;
};

/// Difference U = plus - minus of two log-potential functions.
class DeltaSubharmonicFn {
 public:
  DeltaSubharmonicFn() = default;
  DeltaSubharmonicFn(LogPotentialFn plus, LogPotentialFn minus);

  const LogPotentialFn& plus() const { return plus_; }
  const LogPotentialFn& minus() const { return minus_; }

  /// True when the Riesz measures of the two parts have disjoint supports.
  bool canonical() const;

  /// Pointwise value.  -inf at atoms of the plus part, +inf at atoms of the
  /// minus part; exact shared locations are netted first so the value is the
  /// one of the canonical representation.
  double value(cplx z) const;

  DeltaSubharmonicFn scaled(double factor) const;

 private:
  LogPotentialFn plus_;
  LogPotentialFn minus_;
};

/// Canonical representation: Riesz measures replaced by the Jordan variations
/// of the Riesz charge; harmonic parts unchanged; pointwise values preserved
/// away from the netted atoms.
DeltaSubharmonicFn canonicalize(const DeltaSubharmonicFn& U);

/// Riesz charge Jordan variations of U.
ChargeDecomposition riesz_charge(const DeltaSubharmonicFn& U);

/// F(z) = scale * e^{Q(z)} * prod (z - zero_j)^{m_j} / prod (z - pole_j)^{n_j}.
/// Zero and pole multiplicities are positive integers on disjoint locations.
class MeromorphicSpec {
 public:
  MeromorphicSpec(AtomicMeasure zeros, AtomicMeasure poles, Polynomial exp_poly, cplx scale);

  static MeromorphicSpec constant(cplx value);

  const AtomicMeasure& zeros() const { return zeros_; }
  const AtomicMeasure& poles() const { return poles_; }
  const Polynomial& exp_poly() const { return exp_poly_; }
  cplx scale() const { return scale_; }
  bool entire() const { return poles_.empty(); }

  /// ln|F(z)| evaluated by direct multiplication of the factors with exponent
  /// tracking; -inf at zeros, +inf at poles.  Independent of the
  /// log-potential evaluation path.
  double ln_abs_direct(cplx z) const;

  /// 1/F: zeros and poles swapped, Q negated, scale inverted.
  MeromorphicSpec reciprocal() const;

 private:
  AtomicMeasure zeros_;
  AtomicMeasure poles_;
  Polynomial exp_poly_;
  cplx scale_;
};

/// ln|F| as a canonical DeltaSubharmonicFn: plus part carries the zeros and
/// the harmonic part Re Q + ln|scale|, minus part carries the poles.
DeltaSubharmonicFn ln_modulus(const MeromorphicSpec& F);

}  // namespace nevlab
