#include "nevlab/quad2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "nevlab/parallel.hpp"

namespace nevlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_finite(double v, double lim = 1e30) {
  if (std::isnan(v)) return 0.0;
  return std::clamp(v, -lim, lim);
}
}  // namespace

double CellQuery::half_diag() const {
  const double hx = 0.5 * (x1 - x0), hy = 0.5 * (y1 - y0);
  return std::sqrt(hx * hx + hy * hy);
}

double CellQuery::dist_min(cplx a) const {
  const double dx = std::max({x0 - a.real(), a.real() - x1, 0.0});
  const double dy = std::max({y0 - a.imag(), a.imag() - y1, 0.0});
  return std::sqrt(dx * dx + dy * dy);
}

double CellQuery::dist_max(cplx a) const {
  const double dx = std::max(std::fabs(a.real() - x0), std::fabs(a.real() - x1));
  const double dy = std::max(std::fabs(a.imag() - y0), std::fabs(a.imag() - y1));
  return std::sqrt(dx * dx + dy * dy);
}

// Antiderivative with d2F/dxdy = ln sqrt(x^2+y^2):
//   F(x,y) = (x y ln(x^2+y^2) + y^2 atan(x/y) + x^2 atan(y/x)) / 2 - 3xy/2.
double log_rect_integral(const CellQuery& cell, cplx a) {
  auto F = [](double x, double y) {
    if (x == 0.0 && y == 0.0) return 0.0;
    const double t1 = (x == 0.0 || y == 0.0) ? 0.0 : x * y * std::log(x * x + y * y);
    const double t2 = (y == 0.0) ? 0.0 : y * y * std::atan(x / y);
    const double t3 = (x == 0.0) ? 0.0 : x * x * std::atan(y / x);
    return 0.5 * (t1 + t2 + t3) - 1.5 * x * y;
  };
  const double x0 = cell.x0 - a.real(), x1 = cell.x1 - a.real();
  const double y0 = cell.y0 - a.imag(), y1 = cell.y1 - a.imag();
  return F(x1, y1) - F(x0, y1) - F(x1, y0) + F(x0, y0);
}

namespace {

struct Engine {
  const LogSumFn& f;
  XForm xf;
  const CellClassifier& classify;
  const Membership& member;
  const Quad2dOptions& opt;
  double total_area;
  StableAccumulator value, error;
  long cells = 0;
  bool converged = true;

  double cell_tol(double area) const { return opt.abs_tol * area / total_area; }

  void accept(double v, double e) {
    value.add(v);
    error.add(e);
    ++cells;
  }

  // Rigorous range of the untransformed f over the cell: polynomial part via
  // midpoint + Lipschitz, each log term via [ln dmin, ln dmax].
  struct Range {
    double lo, hi;
  };
  Range base_range(const CellQuery& c) const {
    const cplx mid = c.center();
    const double hd = c.half_diag();
    const double smooth = f.constant() + f.poly().real_part(mid);
    const double lip = f.poly_lipschitz(std::abs(mid) + hd) * hd;
    double lo = smooth - lip, hi = smooth + lip;
    for (const LogTerm& t : f.terms()) {
      const double dmin = c.dist_min(t.location);
      const double dmax = c.dist_max(t.location);
      const double ln_lo = dmin > 0.0 ? std::log(dmin) : -kInf;
      const double ln_hi = std::log(dmax);
      if (t.coef > 0.0) {
        lo += t.coef * ln_lo;  // -inf when the atom touches the cell
        hi += t.coef * ln_hi;
      } else {
        lo += t.coef * ln_hi;
        hi += t.coef * ln_lo;  // +inf when the atom touches the cell
      }
    }
    return {lo, hi};
  }

  // Exact-ish integral of the untransformed f over the cell, with a rigorous
  // remainder bound.  Far log terms use midpoint + curvature remainder, near
  // ones the exact rectangle integral.
  struct CellInt {
    double val, err;
  };
  CellInt plain_integral(const CellQuery& c) const {
    const cplx mid = c.center();
    const double hd = c.half_diag();
    const double area = c.area();
    double v = (f.constant() + f.poly().real_part(mid)) * area;
    double e = f.poly_lipschitz(std::abs(mid) + hd) * hd * area;
    for (const LogTerm& t : f.terms()) {
      const double dmin = c.dist_min(t.location);
      if (dmin >= 4.0 * hd) {
        v += t.coef * area * std::log(std::abs(mid - t.location));
        e += std::fabs(t.coef) * area * hd * hd / (6.0 * dmin * dmin);
      } else {
        v += t.coef * log_rect_integral(c, t.location);
      }
    }
    return {v, e};
  }

  // Upper bound for the integral of |f| over the cell (singularities included).
  double abs_integral_bound(const CellQuery& c) const {
    const cplx mid = c.center();
    const double hd = c.half_diag();
    const double area = c.area();
    double b = (std::fabs(f.constant() + f.poly().real_part(mid)) +
                f.poly_lipschitz(std::abs(mid) + hd) * hd) *
               area;
    for (const LogTerm& t : f.terms()) {
      // int |ln| = 2 int ln^+ - int ln  <=  2 area ln^+(dmax) - logRect.
      const double pos = std::max(0.0, std::log(c.dist_max(t.location)));
      b += std::fabs(t.coef) * (2.0 * area * pos - log_rect_integral(c, t.location));
    }
    return std::max(b, 0.0);
  }

  bool cell_has_atom(const CellQuery& c) const {
    for (const LogTerm& t : f.terms())
      if (c.contains(t.location)) return true;
    return false;
  }

  void straddle_leaf(const CellQuery& c) {
    // Fractional weight from a 4x4 subsample; error from the mismatch with
    // the 2x2 subsample plus one subcell of slack.
    const double area = c.area();
    const double wx = (c.x1 - c.x0), wy = (c.y1 - c.y0);
    int hits16 = 0, hits4 = 0;
    double sum = 0.0, fmax = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const cplx p{c.x0 + wx * (i + 0.5) / 4.0, c.y0 + wy * (j + 0.5) / 4.0};
        const double fv = clamp_finite(apply_xform(xf, f.value(p)));
        fmax = std::max(fmax, std::fabs(fv));
        if (member(p)) {
          ++hits16;
          sum += fv;
        }
      }
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (member(cplx{c.x0 + wx * (i + 0.5) / 2.0, c.y0 + wy * (j + 0.5) / 2.0})) ++hits4;
    const double w16 = hits16 / 16.0, w4 = hits4 / 4.0;
    const double mean = hits16 ? sum / hits16 : 0.0;
    double err = area * fmax * (std::fabs(w16 - w4) + 1.0 / 16.0);
    // Contained singularities: widen by the singular mass the samples missed.
    if (cell_has_atom(c)) err += abs_integral_bound(c);
    accept(area * w16 * mean, err);
  }

  void inside_leaf_bracket(const CellQuery& c) {
    // Last resort at depth cap: bracket the contribution.
    const double bound = abs_integral_bound(c);
    const CellInt pl = plain_integral(c);
    switch (xf) {
      case XForm::plain:
        accept(pl.val, pl.err);
        break;
      case XForm::pos_part:
        accept(0.5 * bound, 0.5 * bound);
        break;
      case XForm::abs_value: {
        const double lo = std::max(0.0, std::fabs(pl.val) - pl.err);
        accept(0.5 * (lo + bound), 0.5 * (bound - lo));
        break;
      }
    }
  }

  void recurse(const CellQuery& c, int depth, CellClass cls) {
    if (cells > opt.max_cells) {
      converged = false;
      inside_leaf_bracket(c);
      return;
    }
    if (cls == CellClass::straddle) cls = classify(c);
    if (cls == CellClass::outside) return;

    const bool has_atom = cell_has_atom(c);

    if (cls == CellClass::straddle) {
      const int limit = has_atom ? std::max(opt.base_depth, opt.atom_force_depth) : opt.base_depth;
      if (depth < limit) {
        subdivide(c, depth, CellClass::straddle);
      } else {
        straddle_leaf(c);
      }
      return;
    }

    // Fully inside the set from here on; children inherit the class.
    if (depth < opt.min_depth) {
      subdivide(c, depth, CellClass::inside);
      return;
    }
    if (has_atom && depth < opt.atom_force_depth) {
      subdivide(c, depth, CellClass::inside);
      return;
    }

    if (xf == XForm::plain) {
      const CellInt pl = plain_integral(c);
      if (pl.err <= cell_tol(c.area()) || depth >= opt.max_depth) {
        accept(pl.val, pl.err);
      } else {
        subdivide(c, depth, CellClass::inside);
      }
      return;
    }

    const Range rg = base_range(c);
    if (rg.lo > 0.0) {  // sign-stable positive: xform(f) == f
      const CellInt pl = plain_integral(c);
      if (pl.err <= cell_tol(c.area()) || depth >= opt.max_depth) {
        accept(pl.val, pl.err);
        return;
      }
    } else if (rg.hi < 0.0) {  // sign-stable negative
      if (xf == XForm::pos_part) {
        accept(0.0, 0.0);
        return;
      }
      const CellInt pl = plain_integral(c);  // |f| == -f
      if (pl.err <= cell_tol(c.area()) || depth >= opt.max_depth) {
        accept(-pl.val, pl.err);
        return;
      }
    } else {
      // Sign unknown: accept via bracket once tight enough.
      const double area = c.area();
      double half;
      if (xf == XForm::pos_part) {
        half = 0.5 * area * std::max(0.0, std::min(rg.hi, kInf));
      } else {
        half = 0.5 * area * std::max(std::fabs(rg.lo), std::fabs(rg.hi));
      }
      if (std::isfinite(half) && half <= cell_tol(area)) {
        if (xf == XForm::pos_part) {
          accept(0.5 * area * std::max(0.0, rg.hi), half);
        } else {
          accept(half, half);
        }
        return;
      }
      if (depth >= opt.max_depth) {
        inside_leaf_bracket(c);
        return;
      }
    }
    subdivide(c, depth, CellClass::inside);
  }

  void subdivide(const CellQuery& c, int depth, CellClass cls) {
    const double mx = 0.5 * (c.x0 + c.x1), my = 0.5 * (c.y0 + c.y1);
    recurse({c.x0, c.y0, mx, my}, depth + 1, cls);
    recurse({mx, c.y0, c.x1, my}, depth + 1, cls);
    recurse({c.x0, my, mx, c.y1}, depth + 1, cls);
    recurse({mx, my, c.x1, c.y1}, depth + 1, cls);
  }
};

}  // namespace

Quad2dResult integrate_logsum(const LogSumFn& f, XForm xf, const CellClassifier& classify,
                              const Membership& member, double bound_radius,
                              const Quad2dOptions& opt) {
  const double B = bound_radius;
  Engine eng{f, xf, classify, member, opt, 4.0 * B * B, {}, {}, 0, true};
  eng.recurse({-B, -B, B, B}, 0, CellClass::straddle);
  Quad2dResult out;
  out.value = eng.value.total();
  out.error = eng.error.total();
  out.cells = eng.cells;
  out.converged = eng.converged;
  return out;
}

}  // namespace nevlab
