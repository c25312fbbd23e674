#pragma once

#include <functional>
#include <span>
#include <vector>

namespace wigner {

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre_rule(int n);

struct AdaptiveOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_panels = 1 << 16;
  int order = 20;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;      // sum of per-panel |G(panel) - G(left) - G(right)|
  double abs_value = 0.0;  // integral of |f|, for cancellation diagnostics
  int panels = 0;
  bool converged = false;
};

/// Globally adaptive composite Gauss-Legendre quadrature. The initial panels
/// are the intervals between consecutive `breakpoints`; the panel with the
/// largest error estimate is bisected until the summed estimate drops below
/// max(rel_tol * |value|, abs_tol) or the panel budget is spent.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints,
                                    const AdaptiveOptions& options = {});

}  // namespace wigner
