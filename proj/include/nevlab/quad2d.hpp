// Adaptive quadtree integration of log-sum functions (optionally transformed
// by max(0,.) or |.|) over planar sets given by a cell classifier plus a
// membership predicate.
//
// Inside cells are evaluated in closed form: every ln|w-a| term has an exact
// rectangle integral (far terms use a midpoint value with a rigorous
// second-order remainder bound), and the polynomial part a midpoint value
// with a Lipschitz remainder.  Cells whose sign cannot be pinned down by
// interval bounds are subdivided; boundary cells get fractional weights from
// 16-point subsampling with a two-level comparison for the error term.
#pragma once

#include <functional>

#include "nevlab/logsum.hpp"

namespace nevlab {

struct CellQuery {
  double x0, y0, x1, y1;

  cplx center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
  double half_width() const { return 0.5 * (x1 - x0); }
  double half_diag() const;
  double area() const { return (x1 - x0) * (y1 - y0); }
  bool contains(cplx z) const {  // half-open so sibling cells partition
    return z.real() >= x0 && z.real() < x1 && z.imag() >= y0 && z.imag() < y1;
  }
  double dist_min(cplx a) const;
  double dist_max(cplx a) const;
};

enum class CellClass { inside, outside, straddle };

using CellClassifier = std::function<CellClass(const CellQuery&)>;
using Membership = std::function<bool(cplx)>;

struct Quad2dOptions {
  int min_depth = 3;
  int base_depth = 10;        // straddle (set boundary) cells stop here
  int atom_force_depth = 12;  // cells containing an atom refine at least this far
  int max_depth = 21;         // sign-stability search limit
  double abs_tol = 1e-5;
  long max_cells = 8'000'000;
};

struct Quad2dResult {
  double value = 0.0;
  double error = 0.0;
  long cells = 0;
  bool converged = true;
};

/// Exact integral of ln|w - a| over the rectangle, any position of a.
double log_rect_integral(const CellQuery& cell, cplx a);

/// Integral of xform(f) over the set described by (classify, member),
/// explored from the bounding square [-B, B]^2.
Quad2dResult integrate_logsum(const LogSumFn& f, XForm xf, const CellClassifier& classify,
                              const Membership& member, double bound_radius,
                              const Quad2dOptions& opt = {});

}  // namespace nevlab
