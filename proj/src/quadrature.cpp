#include "wigner/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>

#include "wigner/error.hpp"

namespace wigner {

GaussLegendreRule gauss_legendre_rule(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "Gauss-Legendre order must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {

struct Panel {
  double a;
  double b;
  double whole;       // G over [a, b]
  double left;        // G over [a, mid]
  double right;       // G over [mid, b]
  double abs_left;
  double abs_right;

  double estimate() const { return left + right; }
  double error() const { return std::abs(whole - left - right); }
  double abs_estimate() const { return abs_left + abs_right; }
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error() < y.error(); }
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints,
                                    const AdaptiveOptions& options) {
  if (breakpoints.size() < 2) {
    throw Error(ErrorCode::InvalidParameter, "need at least two breakpoints");
  }
  const GaussLegendreRule rule = gauss_legendre_rule(options.order);

  auto apply = [&](double a, double b, double& abs_out) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double v = rule.weights[i] * f(mid + half * rule.nodes[i]);
      sum += v;
      abs_sum += std::abs(v);
    }
    abs_out = abs_sum * std::abs(half);
    return sum * half;
  };

  auto make_panel = [&](double a, double b, double whole) {
    Panel p{a, b, whole, 0.0, 0.0, 0.0, 0.0};
    const double mid = 0.5 * (a + b);
    p.left = apply(a, mid, p.abs_left);
    p.right = apply(mid, b, p.abs_right);
    return p;
  };

  std::vector<Panel> heap;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    double ignored = 0.0;
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;
    heap.push_back(make_panel(a, b, apply(a, b, ignored)));
  }
  std::make_heap(heap.begin(), heap.end(), ByError{});

  auto totals = [&heap]() {
    QuadratureResult r;
    for (const Panel& p : heap) {
      r.value += p.estimate();
      r.error += p.error();
      r.abs_value += p.abs_estimate();
    }
    r.panels = static_cast<int>(heap.size());
    return r;
  };

  QuadratureResult result = totals();
  int since_refresh = 0;
  while (true) {
    const double target = std::max(options.rel_tol * std::abs(result.value), options.abs_tol);
    // Once the estimate sits at the roundoff level of the summed |f| further
    // bisection cannot help.
    const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * result.abs_value;
    if (result.error <= target || result.error <= roundoff) {
      result = totals();
      if (result.error <= std::max(target, roundoff)) {
        result.converged = result.error <= target || roundoff <= target;
        return result;
      }
    }
    if (static_cast<int>(heap.size()) >= options.max_panels) {
      result = totals();
      result.converged = false;
      return result;
    }
    std::pop_heap(heap.begin(), heap.end(), ByError{});
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel lo = make_panel(worst.a, mid, worst.left);
    const Panel hi = make_panel(mid, worst.b, worst.right);
    result.value += lo.estimate() + hi.estimate() - worst.estimate();
    result.error += lo.error() + hi.error() - worst.error();
    result.abs_value += lo.abs_estimate() + hi.abs_estimate() - worst.abs_estimate();
    heap.push_back(lo);
    std::push_heap(heap.begin(), heap.end(), ByError{});
    heap.push_back(hi);
    std::push_heap(heap.begin(), heap.end(), ByError{});
    if (++since_refresh == 256) {
      result = totals();
      since_refresh = 0;
    }
  }
}

}  // namespace wigner
