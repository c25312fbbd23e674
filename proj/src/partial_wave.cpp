#include "wigner/partial_wave.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "wigner/error.hpp"
#include "wigner/quadrature.hpp"
#include "wigner/wigner_exact.hpp"

namespace wigner {

namespace {

constexpr double kRelTol = 1e-10;
// exp(-40) ~ 4e-18: tail beyond this many e-folds is negligible against the
// relative tolerance.
constexpr double kTailExponent = 40.0;
constexpr double kMaxExponent = 745.0;

void check_integral_args(double rho, int l, double epsilon) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::InvalidParameter, "rho must be positive, got " + std::to_string(rho));
  }
  if (l < 0) throw Error(ErrorCode::InvalidParameter, "l must be >= 0");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::InvalidParameter,
                "epsilon must be positive, got " + std::to_string(epsilon));
  }
}

}  // namespace

WavepacketParams::WavepacketParams(double p, double sigma_p) : p_(p), sigma_p_(sigma_p) {
  if (!(p > 0.0) || !(sigma_p > 0.0) || !std::isfinite(p) || !std::isfinite(sigma_p)) {
    throw Error(ErrorCode::InvalidParameter, "p and sigma_p must be positive");
  }
  if (epsilon() > 0.1) {
    std::clog << "warning: sigma_p / p = " << epsilon()
              << " is not small; the closed-form integral loses accuracy\n";
  }
}

RadialPoint radial_point(double k, const WavepacketParams& params) {
  if (!(k > 0.0)) throw Error(ErrorCode::InvalidParameter, "k must be positive");
  return {k, k / params.p()};
}

namespace detail {

IntegralEvaluation integral_legendre_form(double rho, int l, double epsilon) {
  check_integral_args(rho, l, epsilon);
  const double two_eps2 = 2.0 * epsilon * epsilon;
  const double a = rho / two_eps2;

  // The integral is ~ exp(-eps^2 l(l+1) / rho); cut the u range once the
  // exponential weight is kTailExponent e-folds below that.
  const double cut = std::min(kMaxExponent, kTailExponent + epsilon * epsilon * l * (l + 1.0) / rho);
  const double u_max = std::min(2.0, cut / a);
  const double theta_max = 2.0 * std::asin(std::sqrt(0.5 * u_max));

  // Initial panels uniform in theta, fine enough for both the decay scale and
  // the Legendre oscillation.
  const double h = std::min(epsilon / 4.0, std::numbers::pi / (8.0 * l + 8.0));
  const int panels = std::max(1, static_cast<int>(std::ceil(theta_max / h)));
  std::vector<double> breaks(panels + 1);
  for (int i = 0; i <= panels; ++i) {
    const double t = theta_max * i / panels;
    const double s = std::sin(0.5 * t);
    breaks[i] = std::min(u_max, 2.0 * s * s);
  }
  breaks.back() = u_max;

  const auto integrand = [a, l](double u) {
    return std::exp(-a * u) * legendre_p_complement(l, u);
  };
  // Bisection cannot beat roundoff once the oscillation cancels most of the
  // integral, so the budget is kept to a small multiple of the initial panels.
  const QuadratureResult q = integrate_adaptive(
      integrand, breaks, {.rel_tol = kRelTol, .max_panels = 4 * panels + 256});
  const double scale = 1.0 / two_eps2;
  return {q.value * scale, q.error * scale,
          q.value != 0.0 ? q.abs_value / std::abs(q.value) : INFINITY, q.converged};
}

IntegralEvaluation integral_positive_form(double rho, int l, double epsilon) {
  check_integral_args(rho, l, epsilon);
  const double two_eps2 = 2.0 * epsilon * epsilon;
  const double a = rho / two_eps2;
  const double log_const = l * std::log(0.5 * a) - std::lgamma(l + 1.0) - std::log(two_eps2);

  const auto log_integrand = [a, l, log_const](double u) {
    if (l == 0) return log_const - a * u;
    return l * std::log(u * (2.0 - u)) - a * u + log_const;
  };

  // Peak of l ln(u(2-u)) - a u and its curvature width.
  double peak = 0.0;
  double width = 1.0 / a;
  if (l > 0) {
    const double b = a + l;
    peak = 2.0 * l / (b + std::sqrt(b * b - 2.0 * a * l));
    const double curvature = l * (1.0 / (peak * peak) + 1.0 / ((2.0 - peak) * (2.0 - peak)));
    width = 1.0 / std::sqrt(curvature);
  }
  const double log_peak = log_integrand(std::max(peak, 1e-300));
  const double drop = 60.0;

  double hi = std::min(2.0, peak + width);
  for (double step = width; hi < 2.0 && log_integrand(hi) > log_peak - drop; step *= 2.0) {
    hi = std::min(2.0, hi + step);
  }
  double lo = 0.0;
  if (l > 0) {
    lo = std::max(0.0, peak - width);
    for (double step = width; lo > 0.0 && log_integrand(lo) > log_peak - drop; step *= 2.0) {
      lo = std::max(0.0, lo - step);
    }
  }

  const double h = 0.5 * width;
  const int panels = std::clamp(static_cast<int>(std::ceil((hi - lo) / h)), 1, 4096);
  std::vector<double> breaks(panels + 1);
  for (int i = 0; i <= panels; ++i) breaks[i] = lo + (hi - lo) * i / panels;
  breaks.back() = hi;

  const auto integrand = [&log_integrand](double u) { return std::exp(log_integrand(u)); };
  const QuadratureResult q = integrate_adaptive(integrand, breaks, {.rel_tol = kRelTol});
  return {q.value, q.error, 1.0, q.converged};
}

}  // namespace detail

double integral_exact(double rho, int l, double epsilon) {
  check_integral_args(rho, l, epsilon);
  // The direct integrand cancels down to I ~ exp(-E), E = eps^2 l(l+1) / rho,
  // with a cancellation ratio observed to track exp(E - 1.5). Skip it outright
  // once that is clearly past the threshold.
  const double decay = epsilon * epsilon * l * (l + 1.0) / rho;
  if (decay <= std::log(detail::kMaxCancellation) + 3.0) {
    const detail::IntegralEvaluation direct = detail::integral_legendre_form(rho, l, epsilon);
    if (direct.converged && direct.cancellation <= detail::kMaxCancellation) return direct.value;
  }
  const detail::IntegralEvaluation eval = detail::integral_positive_form(rho, l, epsilon);
  if (!eval.converged) {
    throw QuadratureError("I(rho=" + std::to_string(rho) + ", l=" + std::to_string(l) +
                              ") did not reach relative tolerance 1e-10",
                          eval.value, eval.error);
  }
  return eval.value;
}

double integral_approx(double rho, int l, double epsilon) {
  check_integral_args(rho, l, epsilon);
  const double ll = static_cast<double>(l) * (l + 1.0);
  return std::exp(-epsilon * epsilon * (ll + 1.0 / 3.0) / rho) / rho;
}

double integral_rel_error(double rho, int l, double epsilon) {
  const double exact = integral_exact(rho, l, epsilon);
  if (std::abs(exact) < 1e-280) {
    throw Error(ErrorCode::DivisionByNearZero,
                "I(rho, l) = " + std::to_string(exact) + " is too small for a relative error");
  }
  return (exact - integral_approx(rho, l, epsilon)) / exact;
}

double transform_wavefunction(double k, int l, int m, const WavepacketParams& params,
                              IntegralMode mode) {
  const RadialPoint point = radial_point(k, params);
  if (l < 0) throw Error(ErrorCode::InvalidParameter, "l must be >= 0");
  if (m != 0) return 0.0;

  const double eps = params.epsilon();
  const double sigma2 = params.sigma_p() * params.sigma_p();
  const double integral = (mode == IntegralMode::Quadrature)
                              ? integral_exact(point.rho, l, eps)
                              : integral_approx(point.rho, l, eps);
  const double dk = k - params.p();
  const double norm = std::pow(2.0 * std::numbers::pi * sigma2, -0.75);
  return norm * std::sqrt(2.0 * std::numbers::pi) * k * std::exp(-dk * dk / (4.0 * sigma2)) *
         std::sqrt(l + 0.5) * 2.0 * eps * eps * integral;
}

}  // namespace wigner
