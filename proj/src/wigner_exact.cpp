#include "wigner/wigner_exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "wigner/error.hpp"

namespace wigner {

namespace {

constexpr int kRescaleExponent = 512;

// ln C(n, k) for integers 0 <= k <= n.
double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double d_exact(const AngularIndex& idx, Angle angle) {
  const double theta = angle.radians();
  if (theta == 0.0) return idx.two_m1() == idx.two_m2() ? 1.0 : 0.0;

  const auto [canon, sign] = canonicalize(idx);
  const int tj = canon.two_j();
  const int tm1 = canon.two_m1();
  const int tm2 = canon.two_m2();
  const int alpha = canon.alpha();

  const double half = 0.5 * theta;
  const double s = std::sin(half);
  const double c = std::cos(half);
  const double ls = std::log(s);
  const double lc = std::log(c);
  const double u = 2.0 * s * s;  // 1 - cos(theta)

  // Seed at j0 = max(m1, -m2); the series then has a single term.
  int two_j0 = 0;
  double log_seed = 0.0;
  if (tm1 >= -tm2) {
    // j0 = m1: d = (-1)^a sqrt(C(2 m1, m1 + m2)) s^a c^(m1 + m2)
    two_j0 = tm1;
    const int n = tm1;
    const int k = (tm1 + tm2) / 2;
    log_seed = 0.5 * log_binomial(n, k) + alpha * ls + k * lc;
  } else {
    // j0 = -m2: d = (-1)^a sqrt(C(2j0, j0 + m1)) s^(j0 + m1) c^(j0 - m1)
    two_j0 = -tm2;
    const int n = -tm2;
    const int k = (two_j0 + tm1) / 2;
    log_seed = 0.5 * log_binomial(n, k) + k * ls + ((two_j0 - tm1) / 2) * lc;
  }
  const double phase = (alpha % 2 == 0) ? 1.0 : -1.0;

  // Recurrence state: d_j and its first difference d_j - d_{j-1}, as
  // mantissas sharing one binary exponent. d_{j0-1} = 0, so the difference
  // starts equal to the seed.
  const double log2_seed = log_seed / std::numbers::ln2;
  long exponent = static_cast<long>(std::floor(log2_seed));
  double curr = phase * std::exp2(log2_seed - static_cast<double>(exponent));
  double diff = curr;

  const double m1 = 0.5 * tm1;
  const double m2 = 0.5 * tm2;
  const double m1m2 = m1 * m2;
  const double m1sq = m1 * m1;
  const double m2sq = m2 * m2;
  const double msum = m1sq + m2sq;
  const double mprod = m1sq * m2sq;

  // x^2 - sqrt((x^2 - m1^2)(x^2 - m2^2)) without cancellation; returns the root too.
  const auto root_and_gap = [&](double x, double& root) {
    const double x2 = x * x;
    root = std::sqrt((x2 - m1sq) * (x2 - m2sq));
    return (msum * x2 - mprod) / (x2 + root);
  };

  // The three-term recurrence
  //   j R(j+1) d_{j+1} = (2j+1)(j(j+1) cos t - m1 m2) d_j - (j+1) R(j) d_{j-1},
  //   R(x) = sqrt((x^2 - m1^2)(x^2 - m2^2)),
  // rewritten for the differences. The coefficient of d_j in the new
  // difference is O(u) + O((m1-m2)^2 / j^2) and is formed without cancelling
  // the O(j^3) parts, which keeps the error growth near theta = 0 at the
  // random-walk level.
  for (int two_j = two_j0; two_j < tj; two_j += 2) {
    const double j = 0.5 * two_j;
    if (two_j == 0) {
      diff = -u * curr;  // d^1_00 = 1 - u
    } else {
      const double jp = j + 1.0;
      double root_j = 0.0;
      double root_jp = 0.0;
      const double gap_j = root_and_gap(j, root_j);
      const double gap_jp = root_and_gap(jp, root_jp);
      const double denom = j * root_jp;
      const double twoj1 = 2.0 * j + 1.0;
      const double c = (j * gap_jp + jp * gap_j - twoj1 * m1m2 - twoj1 * j * jp * u) / denom;
      const double b = jp * root_j / denom;
      diff = c * curr + b * diff;
    }
    curr += diff;
    if (std::abs(curr) > std::ldexp(1.0, kRescaleExponent)) {
      curr = std::ldexp(curr, -kRescaleExponent);
      diff = std::ldexp(diff, -kRescaleExponent);
      exponent += kRescaleExponent;
    }
  }

  // Anything this far below the subnormal range is zero in double.
  return sign * std::ldexp(curr, static_cast<int>(std::clamp(exponent, -4096L, 4096L)));
}

HighPrecReal d_series_highprec_value(const AngularIndex& idx, Angle angle, int digits) {
  if (digits < 30) {
    throw Error(ErrorCode::InvalidParameter,
                "series oracle needs at least 30 digits, got " + std::to_string(digits));
  }
  const auto [canon, sign] = canonicalize(idx);
  const long alpha = canon.alpha();
  const long j_minus_m1 = (canon.two_j() - canon.two_m1()) / 2;
  const long j_plus_m2 = (canon.two_j() + canon.two_m2()) / 2;
  const long j_plus_m1 = (canon.two_j() + canon.two_m1()) / 2;
  const long j_minus_m2 = (canon.two_j() - canon.two_m2()) / 2;
  const long cos_power = canon.two_j() - alpha;  // 2j - (m1 - m2)

  const HighPrecReal theta(angle.radians(), digits);
  const HighPrecReal half = theta / 2;
  const HighPrecReal s = half.sin();
  const HighPrecReal c = half.cos();
  const HighPrecReal t2 = (s / c) * (s / c);

  // 2F1(-(j-m1), -(j+m2); a+1; -tan^2(theta/2)), accumulated term by term.
  HighPrecReal term = HighPrecReal::from_integer(1, digits);
  HighPrecReal sum = term;
  double max_log10 = 0.0;
  const long last = std::min(j_minus_m1, j_plus_m2);
  for (long k = 0; k < last; ++k) {
    term = -(term * ((j_minus_m1 - k) * (j_plus_m2 - k)) * t2) / ((alpha + 1 + k) * (k + 1));
    sum = sum + term;
    max_log10 = std::max(max_log10, term.log10_abs());
  }

  const double cancellation = max_log10 - sum.log10_abs();
  if (cancellation > digits - 15) {
    throw Error(ErrorCode::PrecisionExhausted,
                "series cancellation of " + std::to_string(cancellation) +
                    " digits exceeds the budget at " + std::to_string(digits) + " digits");
  }

  const HighPrecReal ratio =
      HighPrecReal::factorial(static_cast<unsigned long>(j_plus_m1), digits) *
      HighPrecReal::factorial(static_cast<unsigned long>(j_minus_m2), digits) /
      (HighPrecReal::factorial(static_cast<unsigned long>(j_minus_m1), digits) *
       HighPrecReal::factorial(static_cast<unsigned long>(j_plus_m2), digits));
  HighPrecReal prefactor = ratio.sqrt() / HighPrecReal::factorial(static_cast<unsigned long>(alpha), digits) *
                           s.pow(alpha) * c.pow(cos_power);
  if ((alpha % 2 != 0) != (sign < 0)) prefactor = -prefactor;
  return prefactor * sum;
}

double d_series_highprec(const AngularIndex& idx, Angle theta, int digits) {
  return d_series_highprec_value(idx, theta, digits).to_double();
}

double legendre_p(int l, double x) {
  if (l < 0) throw Error(ErrorCode::ArgumentOutOfRange, "Legendre degree must be >= 0");
  if (!(x >= -1.0 && x <= 1.0)) {
    throw Error(ErrorCode::ArgumentOutOfRange,
                "Legendre argument " + std::to_string(x) + " outside [-1, 1]");
  }
  if (l == 0) return 1.0;
  double prev = 1.0;
  double curr = x;
  for (int n = 1; n < l; ++n) {
    const double next = ((2.0 * n + 1.0) * x * curr - n * prev) / (n + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double legendre_p_complement(int l, double u) {
  if (l < 0) throw Error(ErrorCode::ArgumentOutOfRange, "Legendre degree must be >= 0");
  if (!(u >= 0.0 && u <= 2.0)) {
    throw Error(ErrorCode::ArgumentOutOfRange,
                "complement argument " + std::to_string(u) + " outside [0, 2]");
  }
  // (n+1)(P_{n+1} - P_n) = -(2n+1) u P_n + n (P_n - P_{n-1})
  double p = 1.0;
  double diff = 0.0;  // P_0 - P_{-1}, multiplied by n = 0 below
  for (int n = 0; n < l; ++n) {
    diff = (-(2.0 * n + 1.0) * u * p + n * diff) / (n + 1.0);
    p += diff;
  }
  return p;
}

}  // namespace wigner
