#include "wigner/angular_core.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "wigner/error.hpp"

namespace wigner {

namespace {

// 12 * Delta^2, exact.
std::int64_t delta_squared_times_12(const AngularIndex& idx) noexcept {
  const std::int64_t tj = idx.two_j();
  const std::int64_t a = idx.two_m1();
  const std::int64_t b = idx.two_m2();
  return 3 * tj * (tj + 2) - (a * a + b * b + a * b) + 4;
}

}  // namespace

AngularIndex AngularIndex::make(int two_j, int two_m1, int two_m2) {
  if (two_j < 0) {
    throw Error(ErrorCode::NegativeJ, "two_j = " + std::to_string(two_j) + " is negative");
  }
  if (std::abs(two_m1) > two_j || std::abs(two_m2) > two_j) {
    throw Error(ErrorCode::MOutOfRange, "|m| exceeds j for (two_j, two_m1, two_m2) = (" +
                                            std::to_string(two_j) + ", " +
                                            std::to_string(two_m1) + ", " +
                                            std::to_string(two_m2) + ")");
  }
  const int parity = two_j & 1;
  if ((two_m1 & 1) != parity || (two_m2 & 1) != parity) {
    throw Error(ErrorCode::ParityMismatch, "two_j, two_m1 and two_m2 must share parity");
  }
  return AngularIndex(two_j, two_m1, two_m2);
}

AngularIndex make_index(int two_j, int two_m1, int two_m2) {
  return AngularIndex::make(two_j, two_m1, two_m2);
}

Angle::Angle(double theta) : theta_(theta) {
  if (!std::isfinite(theta) || theta < 0.0 || theta >= std::numbers::pi) {
    throw Error(ErrorCode::AngleOutOfRange,
                "theta = " + std::to_string(theta) + " is outside [0, pi)");
  }
}

CanonicalIndex canonicalize(const AngularIndex& idx) noexcept {
  if (idx.is_canonical()) return {idx, 1};
  const int sign = (idx.alpha() % 2 == 0) ? 1 : -1;
  return {AngularIndex::make(idx.two_j(), idx.two_m2(), idx.two_m1()), sign};
}

double delta_squared(const AngularIndex& idx) noexcept {
  return static_cast<double>(delta_squared_times_12(idx)) / 12.0;
}

double delta(const AngularIndex& idx) noexcept {
  const double d2 = delta_squared(idx);
  // Delta^2 >= j + 1/3 > 0 for every valid index.
  assert(d2 * 3.0 >= 3.0 * idx.j() + 1.0 - 1e-9);
  return std::sqrt(d2);
}

double log_abs_prefactor_d(const AngularIndex& canonical) {
  if (!canonical.is_canonical()) {
    throw Error(ErrorCode::InvalidParameter, "prefactor_d requires m1 >= m2");
  }
  const std::int64_t n12 = delta_squared_times_12(canonical);
  const std::int64_t j_plus_m2 = (canonical.two_j() + canonical.two_m2()) / 2;
  const std::int64_t j_minus_m1 = (canonical.two_j() - canonical.two_m1()) / 2;
  // (j+m1)!/(j+m2)! * (j-m2)!/(j-m1)! = prod_{i=1..a} (j+m2+i)(j-m1+i); each
  // factor is paired with one Delta^2 and summed as 0.5*log1p(.).
  double sum = 0.0;
  for (int i = 1; i <= canonical.alpha(); ++i) {
    const std::int64_t p = (j_plus_m2 + i) * (j_minus_m1 + i);
    sum += 0.5 * std::log1p(static_cast<double>(12 * p - n12) / static_cast<double>(n12));
  }
  return sum;
}

double prefactor_d(const AngularIndex& canonical) {
  const double magnitude = std::exp(log_abs_prefactor_d(canonical));
  return (canonical.alpha() % 2 == 0) ? magnitude : -magnitude;
}

ApproxParams approx_params(const AngularIndex& idx) {
  const auto [canon, sign] = canonicalize(idx);
  const double log_abs = log_abs_prefactor_d(canon);
  const double magnitude = std::exp(log_abs);
  return ApproxParams{
      .delta = delta(canon),
      .prefactor = (canon.alpha() % 2 == 0) ? magnitude : -magnitude,
      .log_abs_prefactor = log_abs,
      .alpha = canon.alpha(),
      .sign_flip = sign,
  };
}

DerivationConstants derivation_constants(const AngularIndex& idx) noexcept {
  return {idx.alpha(), idx.beta()};
}

}  // namespace wigner
