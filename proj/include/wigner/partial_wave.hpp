#pragma once

namespace wigner {

/// Gaussian momentum wavepacket centred on p along z with per-component
/// standard deviation sigma_p. epsilon = sigma_p / p is expected to be small;
/// construction logs a warning to std::clog above 0.1.
class WavepacketParams {
 public:
  WavepacketParams(double p, double sigma_p);

  double p() const noexcept { return p_; }
  double sigma_p() const noexcept { return sigma_p_; }
  double epsilon() const noexcept { return sigma_p_ / p_; }

 private:
  double p_;
  double sigma_p_;
};

struct RadialPoint {
  double k;
  double rho;  // k / p
};

RadialPoint radial_point(double k, const WavepacketParams& params);

/// I(rho, l) = (1/2 eps^2) int_0^pi sin(t) exp(-rho (1 - cos t) / 2 eps^2) P_l(cos t) dt,
/// by adaptive Gauss-Legendre quadrature in u = 1 - cos t, relative tolerance 1e-10.
///
/// Throws QuadratureError (QuadratureNotConverged) carrying the best estimate
/// when the panel budget runs out.
double integral_exact(double rho, int l, double epsilon);

/// Closed form (1/rho) exp(-eps^2 (l(l+1) + 1/3) / rho).
double integral_approx(double rho, int l, double epsilon);

/// (I_exact - I_approx) / I_exact. Throws DivisionByNearZero if |I_exact| < 1e-280.
double integral_rel_error(double rho, int l, double epsilon);

enum class IntegralMode { Quadrature, ClosedForm };

/// Partial-wave amplitude Psi(k, l, m) of the Gaussian wavepacket. Zero for
/// m != 0; otherwise
///
///   (2 pi sigma_p^2)^(-3/4) sqrt(2 pi) k exp(-(k-p)^2 / 4 sigma_p^2) sqrt(l + 1/2) 2 eps^2 I(k/p, l)
///
/// with I from integral_exact or integral_approx.
double transform_wavefunction(double k, int l, int m, const WavepacketParams& params,
                              IntegralMode mode);

namespace detail {

struct IntegralEvaluation {
  double value;
  double error;
  double cancellation;  // int |f| / |int f|
  bool converged;
};

// Direct integrand exp(-a u) P_l(1 - u) with P_l from the complement recurrence.
IntegralEvaluation integral_legendre_form(double rho, int l, double epsilon);

// The same integral after l integrations by parts (Rodrigues' formula):
//   (a/2)^l / l! / (2 eps^2) int_0^2 (u (2 - u))^l exp(-a u) du,  a = rho / 2 eps^2,
// whose integrand is positive, so there is no cancellation for large l.
IntegralEvaluation integral_positive_form(double rho, int l, double epsilon);

// Cancellation ratio above which integral_exact switches to the positive form.
inline constexpr double kMaxCancellation = 1e4;

}  // namespace detail

}  // namespace wigner
