// Adaptive Gauss-Kronrod (G7/K15) quadrature over an interval with caller
// supplied interior breakpoints (kinks, atom angles).
#pragma once

#include <functional>
#include <span>

namespace nevlab {

struct Quad1dOptions {
  double abs_tol = 1e-9;
  int max_panels = 8192;
  // Values beyond this magnitude (incl. inf) are clamped; keeps integrable
  // spikes from poisoning the panel estimates.
  double clamp = 1e30;
};

struct Quad1dResult {
  double value = 0.0;
  double error = 0.0;
  long evals = 0;
  bool converged = true;
};

Quad1dResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                std::span<const double> breakpoints,
                                const Quad1dOptions& opt = {});

}  // namespace nevlab
