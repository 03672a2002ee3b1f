#include "nevlab/logsum.hpp"

#include <cmath>
#include <limits>

namespace nevlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<LogTerm> consolidate_terms(std::vector<LogTerm> in) {
  std::vector<LogTerm> out;
  for (const LogTerm& t : in) {
    bool merged = false;
    for (LogTerm& o : out) {
      if (o.location == t.location) {
        o.coef += t.coef;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(t);
  }
  std::erase_if(out, [](const LogTerm& t) { return t.coef == 0.0; });
  return out;
}
}  // namespace

LogSumFn LogSumFn::from(const LogPotentialFn& v) {
  std::vector<LogTerm> terms;
  terms.reserve(v.riesz().size());
  for (const Atom& a : v.riesz().atoms()) terms.push_back({a.location, a.mass});
  return LogSumFn(v.constant(), v.harmonic_poly(), std::move(terms));
}

LogSumFn LogSumFn::from(const DeltaSubharmonicFn& U) {
  std::vector<LogTerm> terms;
  terms.reserve(U.plus().riesz().size() + U.minus().riesz().size());
  for (const Atom& a : U.plus().riesz().atoms()) terms.push_back({a.location, a.mass});
  for (const Atom& a : U.minus().riesz().atoms()) terms.push_back({a.location, -a.mass});
  return LogSumFn(U.plus().constant() - U.minus().constant(),
                  U.plus().harmonic_poly() - U.minus().harmonic_poly(),
                  consolidate_terms(std::move(terms)));
}

LogSumFn LogSumFn::kernel(cplx z, double R) {
  return LogSumFn(std::log(2.0 * R), Polynomial{}, {{z, -1.0}});
}

double LogSumFn::value(cplx z) const {
  double v = constant_ + poly_.real_part(z);
  for (const LogTerm& t : terms_) {
    const double n = std::norm(z - t.location);
    if (n == 0.0) return t.coef > 0.0 ? -kInf : kInf;
    v += 0.5 * t.coef * std::log(n);
  }
  return v;
}

LogSumFn LogSumFn::negated() const {
  std::vector<LogTerm> terms = terms_;
  for (LogTerm& t : terms) t.coef = -t.coef;
  return LogSumFn(-constant_, poly_.scaled(cplx{-1.0, 0.0}), std::move(terms));
}

}  // namespace nevlab
