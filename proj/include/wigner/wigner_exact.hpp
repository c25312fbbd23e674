#pragma once

#include "wigner/angular_core.hpp"
#include "wigner/high_precision.hpp"

namespace wigner {

/// d^j_{m1 m2}(theta) in double precision (Condon-Shortley phases).
///
/// Seeds at the lowest admissible j0 = max(|m1|, |m2|), where the terminating
/// series collapses to a single monomial, then runs the three-term recurrence
/// in j upward at fixed (m1, m2). The seed is carried as mantissa and binary
/// exponent so that tiny seeds (large |m1 - m2| at small theta) do not
/// underflow before the recurrence has grown them into range; values that are
/// still below the double range at the target j come back as 0.
///
/// The recurrence is written in terms of 1 - cos(theta) = 2 sin^2(theta/2), so
/// that rounding cos(theta) near theta = 0 does not shift the effective angle.
double d_exact(const AngularIndex& idx, Angle theta);

/// Terminating hypergeometric series for d^j_{m1 m2}(theta) evaluated term by
/// term at `digits` decimal digits, then rounded to double. Non-canonical
/// indices are reduced with the swap symmetry first.
///
/// Throws PrecisionExhausted when log10(max |term| / |sum|) > digits - 15, and
/// InvalidParameter when digits < 30.
double d_series_highprec(const AngularIndex& idx, Angle theta,
                         int digits = HighPrecReal::kDefaultDigits);

/// Same series, returned at full working precision.
HighPrecReal d_series_highprec_value(const AngularIndex& idx, Angle theta,
                                     int digits = HighPrecReal::kDefaultDigits);

/// Legendre polynomial P_l(x) on [-1, 1] by upward recurrence.
double legendre_p(int l, double x);

/// P_l(1 - u) for u in [0, 2], with u supplied directly. The recurrence runs on
/// the differences P_n - P_{n-1}, which carry an explicit factor of u, so no
/// precision is lost forming 1 - u when u is small.
double legendre_p_complement(int l, double u);

}  // namespace wigner
