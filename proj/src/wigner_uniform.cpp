#include "wigner/wigner_uniform.hpp"

#include <cmath>
#include <numbers>

#include "wigner/bessel.hpp"
#include "wigner/error.hpp"

namespace wigner {

double kinematic_factor(Angle angle) {
  const double theta = angle.radians();
  if (theta < kKinematicSeriesThreshold) {
    const double t2 = theta * theta;
    return 1.0 + t2 / 12.0 + t2 * t2 / 160.0;
  }
  return std::sqrt(theta / std::sin(theta));
}

double small_angle_leading(const AngularIndex& canonical, Angle angle) {
  if (!canonical.is_canonical()) {
    throw Error(ErrorCode::InvalidParameter, "small_angle_leading requires m1 >= m2");
  }
  const int alpha = canonical.alpha();
  const long j_plus_m2 = (canonical.two_j() + canonical.two_m2()) / 2;
  const long j_minus_m1 = (canonical.two_j() - canonical.two_m1()) / 2;
  const double half_theta = 0.5 * angle.radians();

  double mantissa = (alpha % 2 == 0) ? 1.0 : -1.0;
  int exponent = 0;
  for (int i = 1; i <= alpha; ++i) {
    const double p = static_cast<double>((j_plus_m2 + i) * (j_minus_m1 + i));
    mantissa *= std::sqrt(p) * half_theta / i;
    int e = 0;
    mantissa = std::frexp(mantissa, &e);
    exponent += e;
  }
  return std::ldexp(mantissa, exponent);
}

double d_approx(const AngularIndex& idx, Angle angle) {
  const double theta = angle.radians();
  if (theta == 0.0) return idx.two_m1() == idx.two_m2() ? 1.0 : 0.0;

  const ApproxParams params = approx_params(idx);
  const ScaledValue bessel = bessel_j_scaled(params.alpha, params.delta * theta);
  const double kinematic = kinematic_factor(angle);

  if (std::isfinite(params.prefactor)) {
    return params.sign_flip * kinematic *
           std::ldexp(params.prefactor * bessel.mantissa, bessel.exponent);
  }
  const double phase = (params.alpha % 2 == 0) ? 1.0 : -1.0;
  const double log_magnitude = params.log_abs_prefactor + bessel.exponent * std::numbers::ln2;
  return params.sign_flip * phase * kinematic * bessel.mantissa * std::exp(log_magnitude);
}

}  // namespace wigner
