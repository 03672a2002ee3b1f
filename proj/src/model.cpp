#include "nevlab/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

namespace nevlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Bit-exact location key; distinct bit patterns (incl. +0/-0) stay distinct.
using LocKey = std::pair<std::uint64_t, std::uint64_t>;

LocKey loc_key(cplx z) {
  return {std::bit_cast<std::uint64_t>(z.real()), std::bit_cast<std::uint64_t>(z.imag())};
}

std::vector<Atom> consolidate(std::vector<Atom> atoms) {
  for (const Atom& a : atoms) {
    if (a.mass == 0.0 || !std::isfinite(a.mass))
      throw ValidationError("atom mass must be finite and nonzero");
    if (!std::isfinite(a.location.real()) || !std::isfinite(a.location.imag()))
      throw ValidationError("atom location must be finite");
  }
  std::map<LocKey, std::pair<cplx, double>> merged;
  std::vector<LocKey> order;
  for (const Atom& a : atoms) {
    const LocKey key = loc_key(a.location);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, std::make_pair(a.location, a.mass));
      order.push_back(key);
    } else {
      it->second.second += a.mass;
    }
  }
  std::vector<Atom> out;
  out.reserve(order.size());
  for (const LocKey& key : order) {
    const auto& [loc, mass] = merged.at(key);
    if (mass != 0.0) out.push_back({loc, mass});
  }
  return out;
}

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(consolidate(std::move(atoms))) {}

AtomicMeasure AtomicMeasure::positive(std::vector<Atom> atoms) {
  AtomicMeasure m(std::move(atoms));
  if (!m.all_positive()) throw ValidationError("positive measure requires every mass > 0");
  return m;
}

bool AtomicMeasure::all_positive() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.mass > 0.0; });
}

bool AtomicMeasure::integer_masses() const {
  return std::all_of(atoms_.begin(), atoms_.end(),
                     [](const Atom& a) { return a.mass == std::floor(a.mass); });
}

double AtomicMeasure::total_variation() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += std::fabs(a.mass);
  return s;
}

AtomicMeasure AtomicMeasure::scaled(double factor) const {
  std::vector<Atom> out = atoms_;
  for (Atom& a : out) a.mass *= factor;
  return AtomicMeasure(std::move(out));
}

double radial_count(const AtomicMeasure& nu, double r) {
  if (r < 0.0) throw ValidationError("radial_count requires r >= 0");
  double s = 0.0;
  for (const Atom& a : nu.atoms())
    if (std::abs(a.location) <= r) s += a.mass;
  return s;
}

double integrated_count(const AtomicMeasure& nu, double r, double R) {
  if (!nu.all_positive() && !nu.empty())
    throw ValidationError("integrated_count requires nonnegative masses");
  if (r <= 0.0) throw ValidationError("integrated_count requires r > 0");
  if (R < r) throw ValidationError("integrated_count requires R >= r");
  double s = 0.0;
  for (const Atom& a : nu.atoms()) {
    const double d = std::abs(a.location);
    if (d <= R) s += a.mass * std::log(R / std::max(d, r));
  }
  return s;
}

ChargeDecomposition jordan_decompose(const AtomicMeasure& plus, const AtomicMeasure& minus) {
  std::vector<Atom> signed_atoms = plus.atoms();
  for (const Atom& a : minus.atoms()) signed_atoms.push_back({a.location, -a.mass});
  const AtomicMeasure net{std::move(signed_atoms)};
  std::vector<Atom> up, lo;
  for (const Atom& a : net.atoms()) {
    if (a.mass > 0.0)
      up.push_back(a);
    else
      lo.push_back({a.location, -a.mass});
  }
  return {AtomicMeasure(std::move(up)), AtomicMeasure(std::move(lo))};
}

Polynomial::Polynomial(std::vector<cplx> coefficients) : coef_(std::move(coefficients)) {
  while (!coef_.empty() && coef_.back() == cplx{0.0, 0.0}) coef_.pop_back();
  if (static_cast<int>(coef_.size()) - 1 > kMaxHarmonicDegree)
    throw ValidationError("harmonic polynomial degree exceeds cap " +
                          std::to_string(kMaxHarmonicDegree));
  for (const cplx& c : coef_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw ValidationError("polynomial coefficients must be finite");
}

cplx Polynomial::eval(cplx z) const {
  cplx acc{0.0, 0.0};
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::derivative_bound(double radius) const {
  double s = 0.0, pw = 1.0;
  for (std::size_t k = 1; k < coef_.size(); ++k) {
    s += static_cast<double>(k) * std::abs(coef_[k]) * pw;
    pw *= radius;
  }
  return s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<cplx> out(std::max(coef_.size(), o.coef_.size()), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < coef_.size(); ++i) out[i] += coef_[i];
  for (std::size_t i = 0; i < o.coef_.size(); ++i) out[i] += o.coef_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o.scaled(cplx{-1.0, 0.0});
}

Polynomial Polynomial::scaled(cplx factor) const {
  std::vector<cplx> out = coef_;
  for (cplx& c : out) c *= factor;
  return Polynomial(std::move(out));
}

LogPotentialFn::LogPotentialFn(double constant, Polynomial harmonic_poly, AtomicMeasure riesz)
    : constant_(constant), harmonic_(std::move(harmonic_poly)), riesz_(std::move(riesz)) {
  if (!std::isfinite(constant_)) throw ValidationError("constant part must be finite");
  if (!riesz_.all_positive() && !riesz_.empty())
    throw ValidationError("Riesz measure of a log-potential function must be positive");
}

double LogPotentialFn::value(cplx z) const {
  double v = constant_ + harmonic_.real_part(z);
  for (const Atom& a : riesz_.atoms()) {
    const double n = std::norm(z - a.location);
    if (n == 0.0) return -kInf;
    v += 0.5 * a.mass * std::log(n);
  }
  return v;
}

LogPotentialFn LogPotentialFn::scaled(double factor) const {
  if (factor <= 0.0) throw ValidationError("scaling factor must be positive");
  return LogPotentialFn(factor * constant_, harmonic_.scaled(cplx{factor, 0.0}),
                        riesz_.scaled(factor));
}

DeltaSubharmonicFn::DeltaSubharmonicFn(LogPotentialFn plus, LogPotentialFn minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {}

bool DeltaSubharmonicFn::canonical() const {
  for (const Atom& a : plus_.riesz().atoms())
    for (const Atom& b : minus_.riesz().atoms())
      if (a.location == b.location) return false;
  return true;
}

double DeltaSubharmonicFn::value(cplx z) const {
  // Net masses of bit-identical locations first so shared atoms cancel the
  // way the canonical representation does instead of producing inf - inf.
  double v = plus_.constant() - minus_.constant();
  v += plus_.harmonic_poly().real_part(z) - minus_.harmonic_poly().real_part(z);
  double at_atom_sign = 0.0;
  auto fold = [&](const AtomicMeasure& m, double sign) {
    for (const Atom& a : m.atoms()) {
      const double n = std::norm(z - a.location);
      if (n == 0.0) {
        at_atom_sign += sign * a.mass;
      } else {
        v += 0.5 * sign * a.mass * std::log(n);
      }
    }
  };
  fold(plus_.riesz(), 1.0);
  fold(minus_.riesz(), -1.0);
  if (at_atom_sign > 0.0) return -kInf;
  if (at_atom_sign < 0.0) return kInf;
  return v;
}

DeltaSubharmonicFn DeltaSubharmonicFn::scaled(double factor) const {
  return DeltaSubharmonicFn(plus_.scaled(factor), minus_.scaled(factor));
}

DeltaSubharmonicFn canonicalize(const DeltaSubharmonicFn& U) {
  const ChargeDecomposition jd = riesz_charge(U);
  return DeltaSubharmonicFn(
      LogPotentialFn(U.plus().constant(), U.plus().harmonic_poly(), jd.upper),
      LogPotentialFn(U.minus().constant(), U.minus().harmonic_poly(), jd.lower));
}

ChargeDecomposition riesz_charge(const DeltaSubharmonicFn& U) {
  return jordan_decompose(U.plus().riesz(), U.minus().riesz());
}

MeromorphicSpec::MeromorphicSpec(AtomicMeasure zeros, AtomicMeasure poles, Polynomial exp_poly,
                                 cplx scale)
    : zeros_(std::move(zeros)),
      poles_(std::move(poles)),
      exp_poly_(std::move(exp_poly)),
      scale_(scale) {
  if (scale_ == cplx{0.0, 0.0}) throw ValidationError("scale constant must be nonzero");
  if (!zeros_.all_positive() || !poles_.all_positive())
    throw ValidationError("zero/pole multiplicities must be positive");
  if (!zeros_.integer_masses() || !poles_.integer_masses())
    throw ValidationError("zero/pole multiplicities must be integers");
  for (const Atom& a : zeros_.atoms())
    for (const Atom& b : poles_.atoms())
      if (a.location == b.location)
        throw ValidationError("zeros and poles must not share a location");
}

MeromorphicSpec MeromorphicSpec::constant(cplx value) {
  return MeromorphicSpec(AtomicMeasure{}, AtomicMeasure{}, Polynomial{}, value);
}

double MeromorphicSpec::ln_abs_direct(cplx z) const {
  // Multiply the moduli of all factors, renormalising the mantissa with
  // frexp so products with many factors neither overflow nor underflow.
  double mant = std::abs(scale_);
  long exp2 = 0;
  auto mul = [&](double factor) {
    mant *= factor;
    int e = 0;
    mant = std::frexp(mant, &e);
    exp2 += e;
  };
  for (const Atom& a : zeros_.atoms()) {
    const double d = std::abs(z - a.location);
    if (d == 0.0) return -kInf;
    for (long i = 0; i < std::lround(a.mass); ++i) mul(d);
  }
  for (const Atom& a : poles_.atoms()) {
    const double d = std::abs(z - a.location);
    if (d == 0.0) return kInf;
    for (long i = 0; i < std::lround(a.mass); ++i) mul(1.0 / d);
  }
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0) + exp_poly_.real_part(z);
}

MeromorphicSpec MeromorphicSpec::reciprocal() const {
  return MeromorphicSpec(poles_, zeros_, exp_poly_.scaled(cplx{-1.0, 0.0}), 1.0 / scale_);
}

DeltaSubharmonicFn ln_modulus(const MeromorphicSpec& F) {
  LogPotentialFn plus(std::log(std::abs(F.scale())), F.exp_poly(), F.zeros());
  LogPotentialFn minus(0.0, Polynomial{}, F.poles());
  return DeltaSubharmonicFn(std::move(plus), std::move(minus));
}

}  // namespace nevlab
