#pragma once

#include <cstdint>

namespace wigner {

/// Angular-momentum triple (j, m1, m2) held as doubled integers so that
/// half-integer spins are exact.
///
/// Invariants: two_j >= 0, |two_m1|, |two_m2| <= two_j, and all three share
/// parity. The last one makes alpha = m1 - m2 and beta = m1 + m2 integers.
class AngularIndex {
 public:
  /// Validating factory; throws wigner::Error (NegativeJ, MOutOfRange,
  /// ParityMismatch).
  static AngularIndex make(int two_j, int two_m1, int two_m2);

  int two_j() const noexcept { return two_j_; }
  int two_m1() const noexcept { return two_m1_; }
  int two_m2() const noexcept { return two_m2_; }

  double j() const noexcept { return 0.5 * two_j_; }
  double m1() const noexcept { return 0.5 * two_m1_; }
  double m2() const noexcept { return 0.5 * two_m2_; }

  int alpha() const noexcept { return (two_m1_ - two_m2_) / 2; }
  int beta() const noexcept { return (two_m1_ + two_m2_) / 2; }

  bool is_canonical() const noexcept { return two_m1_ >= two_m2_; }

  friend bool operator==(const AngularIndex&, const AngularIndex&) = default;

 private:
  AngularIndex(int two_j, int two_m1, int two_m2) noexcept
      : two_j_(two_j), two_m1_(two_m1), two_m2_(two_m2) {}

  int two_j_;
  int two_m1_;
  int two_m2_;
};

AngularIndex make_index(int two_j, int two_m1, int two_m2);

/// Rotation angle about y, restricted to [0, pi). Values outside the range
/// (and non-finite values) are rejected rather than wrapped.
class Angle {
 public:
  explicit Angle(double theta);

  double radians() const noexcept { return theta_; }

 private:
  double theta_;
};

struct CanonicalIndex {
  AngularIndex index;
  int sign;  // +1, or (-1)^(m1-m2) of the original when m1 and m2 were swapped
};

/// Swap (m1, m2) when m1 < m2 using d_{m1 m2} = (-1)^(m1-m2) d_{m2 m1}.
CanonicalIndex canonicalize(const AngularIndex& idx) noexcept;

/// Delta^2 = j(j+1) - (m1^2 + m2^2 + m1 m2 - 1)/3, evaluated from an exact
/// integer numerator over 12.
double delta_squared(const AngularIndex& idx) noexcept;
double delta(const AngularIndex& idx) noexcept;

/// Normalization constant D of the Bessel approximation for a canonical index:
///
///   D = (-1)^a [(j+m1)!(j-m2)! / ((j-m1)!(j+m2)!)]^(1/2) / Delta^a,  a = m1 - m2.
///
/// The factorial ratio collapses to a product of a factors that are each
/// combined with one power of Delta and accumulated as log1p terms, so D stays
/// accurate near 1 for large j and never overflows in the log form. Throws
/// InvalidParameter for a non-canonical index.
double prefactor_d(const AngularIndex& canonical);
double log_abs_prefactor_d(const AngularIndex& canonical);

struct ApproxParams {
  double delta;
  double prefactor;          // D, may be +-inf when |D| exceeds double range
  double log_abs_prefactor;  // ln|D|
  int alpha;                 // Bessel order, m1 - m2 after canonicalization
  int sign_flip;             // phase from the swap, +1 if none
};

ApproxParams approx_params(const AngularIndex& idx);

/// Symbols of the underlying differential equation; informational only.
struct DerivationConstants {
  int alpha;  // m1 - m2
  int beta;   // m1 + m2
};

DerivationConstants derivation_constants(const AngularIndex& idx) noexcept;

}  // namespace wigner
