#include "wigner/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wigner/error.hpp"

namespace wigner {

namespace {

constexpr int kRescaleExponent = 600;

ScaledValue normalized(double mantissa, int exponent) noexcept {
  if (mantissa == 0.0 || !std::isfinite(mantissa)) return {mantissa, 0};
  int e = 0;
  const double m = std::frexp(mantissa, &e);
  return {m, exponent + e};
}

}  // namespace

double ScaledValue::value() const noexcept { return std::ldexp(mantissa, exponent); }

namespace detail {

double series_upper_limit(int n) noexcept {
  // x^2/4 <= max(1, (n+1)/4): the ascending series then has ratio of
  // successive terms below 1 from the start and at most mild cancellation.
  return 2.0 * std::sqrt(std::max(1.0, 0.25 * (n + 1)));
}

double asymptotic_lower_limit(int n) noexcept { return 25.0 + 0.5 * double(n) * double(n); }

BesselRegime bessel_regime(int n, double x) noexcept {
  if (x <= series_upper_limit(n)) return BesselRegime::Series;
  if (x >= asymptotic_lower_limit(n)) return BesselRegime::Asymptotic;
  return BesselRegime::Miller;
}

ScaledValue bessel_j_series(int n, double x) {
  // Leading term (x/2)^n / n!, kept in mantissa/exponent form.
  double lead = 1.0;
  int lead_exp = 0;
  const double half_x = 0.5 * x;
  for (int k = 1; k <= n; ++k) {
    lead *= half_x / k;
    int e = 0;
    lead = std::frexp(lead, &e);
    lead_exp += e;
  }

  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (double(k) * double(n + k));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return normalized(lead * sum, lead_exp);
}

ScaledValue bessel_j_miller(int n, double x) {
  const double top = std::max(double(n), x);
  int start = static_cast<int>(top + 40.0 + 2.0 * std::sqrt(40.0 * top));
  start += start & 1;  // even, so the normalization sum lines up

  const double two_over_x = 2.0 / x;
  double next = 0.0;  // f_{k+1}
  double curr = 1.0;  // f_k
  double norm = 0.0;  // f_0 + 2 sum f_{2k}, accumulated at the current scale
  double at_n = 0.0;
  int shift_after_n = 0;
  bool recorded = false;

  for (int k = start; k >= 0; --k) {
    if (k == n) {
      at_n = curr;
      recorded = true;
    }
    if (k % 2 == 0) norm += (k == 0) ? curr : 2.0 * curr;
    if (k == 0) break;

    const double prev = double(k) * two_over_x * curr - next;
    next = curr;
    curr = prev;

    if (std::abs(curr) > std::ldexp(1.0, kRescaleExponent)) {
      curr = std::ldexp(curr, -kRescaleExponent);
      next = std::ldexp(next, -kRescaleExponent);
      norm = std::ldexp(norm, -kRescaleExponent);
      if (recorded) {
        shift_after_n += kRescaleExponent;
      } else {
        at_n = 0.0;
      }
    }
  }
  return normalized(at_n / norm, -shift_after_n);
}

double bessel_j_asymptotic(int n, double x) {
  // Hankel expansion: J_n(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi),
  // chi = x - (n/2 + 1/4) pi. cos/sin of chi are expanded so that x enters
  // only through cos(x), sin(x).
  const double mu = 4.0 * double(n) * double(n);
  const double eight_x = 8.0 * x;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (double(k) * eight_x);
    const double mag = std::abs(term);
    if (mag > last && k > 2) break;  // asymptotic series started to diverge
    // a_k / x^k contributes to Q for odd k, to P for even k, with sign (-1)^floor(k/2).
    const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
    if (k % 2 == 1) {
      q += signed_term;
    } else {
      p += signed_term;
    }
    if (mag < 1e-17 * std::max(std::abs(p), std::abs(q))) break;
    last = mag;
  }

  const double phase = (0.5 * (n % 4) + 0.25) * std::numbers::pi;
  const double cos_phase = std::cos(phase);
  const double sin_phase = std::sin(phase);
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cos_chi = cx * cos_phase + sx * sin_phase;
  const double sin_chi = sx * cos_phase - cx * sin_phase;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace detail

ScaledValue bessel_j_scaled(int n, double x) {
  if (!(x >= 0.0)) {
    throw Error(ErrorCode::NegativeArgument, "bessel_j argument " + std::to_string(x) + " < 0");
  }
  int order = n;
  double sign = 1.0;
  if (order < 0) {
    order = -order;
    if (order % 2 == 1) sign = -1.0;
  }
  if (x == 0.0) return {order == 0 ? sign : 0.0, 0};

  ScaledValue out;
  switch (detail::bessel_regime(order, x)) {
    case detail::BesselRegime::Series:
      out = detail::bessel_j_series(order, x);
      break;
    case detail::BesselRegime::Miller:
      out = detail::bessel_j_miller(order, x);
      break;
    case detail::BesselRegime::Asymptotic:
      out = normalized(detail::bessel_j_asymptotic(order, x), 0);
      break;
  }
  out.mantissa *= sign;
  return out;
}

double bessel_j(int n, double x) { return bessel_j_scaled(n, x).value(); }

}  // namespace wigner
