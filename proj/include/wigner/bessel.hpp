#pragma once

namespace wigner {

/// mantissa * 2^exponent; lets J_n(x) be represented past the double range.
struct ScaledValue {
  double mantissa = 0.0;
  int exponent = 0;

  double value() const noexcept;
};

/// Bessel function of the first kind J_n(x) for integer n and x >= 0.
/// Negative orders use J_{-n} = (-1)^n J_n. Throws NegativeArgument for x < 0.
double bessel_j(int n, double x);

/// Same as bessel_j, but without underflow for large n at small x.
ScaledValue bessel_j_scaled(int n, double x);

namespace detail {

enum class BesselRegime { Series, Miller, Asymptotic };

BesselRegime bessel_regime(int n, double x) noexcept;

// Boundaries in x between the regimes for order n >= 0.
double series_upper_limit(int n) noexcept;
double asymptotic_lower_limit(int n) noexcept;

// Individual evaluators for n >= 0, x > 0. Each is accurate somewhat beyond its
// own regime so that the switch points can be checked from both sides.
ScaledValue bessel_j_series(int n, double x);
ScaledValue bessel_j_miller(int n, double x);
double bessel_j_asymptotic(int n, double x);

}  // namespace detail

}  // namespace wigner
