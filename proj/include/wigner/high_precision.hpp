#pragma once

#include <memory>
#include <string>

namespace wigner {

/// Immutable extended-precision real backed by MPFR. The working precision is
/// chosen per value in decimal digits; binary operations produce a result at
/// the larger of the operand precisions.
class HighPrecReal {
 public:
  static constexpr int kDefaultDigits = 60;

  explicit HighPrecReal(double value, int digits = kDefaultDigits);
  static HighPrecReal from_integer(long value, int digits = kDefaultDigits);
  static HighPrecReal factorial(unsigned long n, int digits = kDefaultDigits);

  HighPrecReal(const HighPrecReal& other);
  HighPrecReal(HighPrecReal&& other) noexcept;
  HighPrecReal& operator=(const HighPrecReal& other);
  HighPrecReal& operator=(HighPrecReal&& other) noexcept;
  ~HighPrecReal();

  int digits() const noexcept { return digits_; }

  double to_double() const noexcept;
  std::string to_string(int significant_digits) const;
  bool is_zero() const noexcept;
  int sign() const noexcept;
  /// log10|x|; -inf for zero.
  double log10_abs() const noexcept;

  HighPrecReal operator-() const;
  friend HighPrecReal operator+(const HighPrecReal& a, const HighPrecReal& b);
  friend HighPrecReal operator-(const HighPrecReal& a, const HighPrecReal& b);
  friend HighPrecReal operator*(const HighPrecReal& a, const HighPrecReal& b);
  friend HighPrecReal operator/(const HighPrecReal& a, const HighPrecReal& b);
  friend HighPrecReal operator*(const HighPrecReal& a, long b);
  friend HighPrecReal operator/(const HighPrecReal& a, long b);

  friend bool operator<(const HighPrecReal& a, const HighPrecReal& b) noexcept;

  HighPrecReal abs() const;
  HighPrecReal sqrt() const;
  HighPrecReal sin() const;
  HighPrecReal cos() const;
  HighPrecReal pow(long exponent) const;

 private:
  struct Impl;
  explicit HighPrecReal(int digits);

  int digits_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace wigner
