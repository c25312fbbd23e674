#pragma once

#include "wigner/angular_core.hpp"

namespace wigner {

/// Uniform low-angle approximation
///
///   d^j_{m1 m2}(theta) ~ D (theta / sin theta)^(1/2) J_{m1-m2}(Delta theta),  m1 >= m2,
///
/// extended to m1 < m2 through the swap symmetry. At theta = 0 it returns the
/// limit, 1 when m1 == m2 and 0 otherwise. The product D * J is formed in
/// scaled form, so large |m1 - m2| neither overflows D nor underflows J.
double d_approx(const AngularIndex& idx, Angle theta);

/// (theta / sin theta)^(1/2); series branch below kKinematicSeriesThreshold.
double kinematic_factor(Angle theta);

inline constexpr double kKinematicSeriesThreshold = 1e-4;

/// Leading small-angle monomial of d for a canonical index:
/// [(j+m1)!(j-m2)!/((j-m1)!(j+m2)!)]^(1/2) (-1)^a / a! (theta/2)^a.
double small_angle_leading(const AngularIndex& canonical, Angle theta);

}  // namespace wigner
