#include "wigner/high_precision.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "wigner/error.hpp"

namespace wigner {

struct HighPrecReal::Impl {
  mpfr_t value;

  explicit Impl(mpfr_prec_t bits) { mpfr_init2(value, bits); }
  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;
  ~Impl() { mpfr_clear(value); }
};

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t bits_for(int digits) {
  // log2(10) bits per digit plus a few guard bits.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

}  // namespace

HighPrecReal::HighPrecReal(int digits) : digits_(digits) {
  if (digits < 1) throw Error(ErrorCode::InvalidParameter, "precision must be positive");
  impl_ = std::make_unique<Impl>(bits_for(digits));
}

HighPrecReal::HighPrecReal(double value, int digits) : HighPrecReal(digits) {
  mpfr_set_d(impl_->value, value, kRound);
}

HighPrecReal HighPrecReal::from_integer(long value, int digits) {
  HighPrecReal out(digits);
  mpfr_set_si(out.impl_->value, value, kRound);
  return out;
}

HighPrecReal HighPrecReal::factorial(unsigned long n, int digits) {
  HighPrecReal out(digits);
  mpfr_fac_ui(out.impl_->value, n, kRound);
  return out;
}

HighPrecReal::HighPrecReal(const HighPrecReal& other) : HighPrecReal(other.digits_) {
  mpfr_set(impl_->value, other.impl_->value, kRound);
}

HighPrecReal::HighPrecReal(HighPrecReal&& other) noexcept = default;

HighPrecReal& HighPrecReal::operator=(const HighPrecReal& other) {
  if (this != &other) *this = HighPrecReal(other);
  return *this;
}

HighPrecReal& HighPrecReal::operator=(HighPrecReal&& other) noexcept = default;

HighPrecReal::~HighPrecReal() = default;

double HighPrecReal::to_double() const noexcept { return mpfr_get_d(impl_->value, kRound); }

std::string HighPrecReal::to_string(int significant_digits) const {
  std::vector<char> buf(static_cast<std::size_t>(significant_digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, impl_->value);
  return std::string(buf.data());
}

bool HighPrecReal::is_zero() const noexcept { return mpfr_zero_p(impl_->value) != 0; }

int HighPrecReal::sign() const noexcept { return mpfr_sgn(impl_->value); }

double HighPrecReal::log10_abs() const noexcept {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, impl_->value, kRound);
  return std::log10(std::abs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

HighPrecReal HighPrecReal::operator-() const {
  HighPrecReal out(digits_);
  mpfr_neg(out.impl_->value, impl_->value, kRound);
  return out;
}

HighPrecReal operator+(const HighPrecReal& a, const HighPrecReal& b) {
  HighPrecReal out(std::max(a.digits_, b.digits_));
  mpfr_add(out.impl_->value, a.impl_->value, b.impl_->value, kRound);
  return out;
}

HighPrecReal operator-(const HighPrecReal& a, const HighPrecReal& b) {
  HighPrecReal out(std::max(a.digits_, b.digits_));
  mpfr_sub(out.impl_->value, a.impl_->value, b.impl_->value, kRound);
  return out;
}

HighPrecReal operator*(const HighPrecReal& a, const HighPrecReal& b) {
  HighPrecReal out(std::max(a.digits_, b.digits_));
  mpfr_mul(out.impl_->value, a.impl_->value, b.impl_->value, kRound);
  return out;
}

HighPrecReal operator/(const HighPrecReal& a, const HighPrecReal& b) {
  HighPrecReal out(std::max(a.digits_, b.digits_));
  mpfr_div(out.impl_->value, a.impl_->value, b.impl_->value, kRound);
  return out;
}

HighPrecReal operator*(const HighPrecReal& a, long b) {
  HighPrecReal out(a.digits_);
  mpfr_mul_si(out.impl_->value, a.impl_->value, b, kRound);
  return out;
}

HighPrecReal operator/(const HighPrecReal& a, long b) {
  HighPrecReal out(a.digits_);
  mpfr_div_si(out.impl_->value, a.impl_->value, b, kRound);
  return out;
}

bool operator<(const HighPrecReal& a, const HighPrecReal& b) noexcept {
  return mpfr_less_p(a.impl_->value, b.impl_->value) != 0;
}

HighPrecReal HighPrecReal::abs() const {
  HighPrecReal out(digits_);
  mpfr_abs(out.impl_->value, impl_->value, kRound);
  return out;
}

HighPrecReal HighPrecReal::sqrt() const {
  HighPrecReal out(digits_);
  mpfr_sqrt(out.impl_->value, impl_->value, kRound);
  return out;
}

HighPrecReal HighPrecReal::sin() const {
  HighPrecReal out(digits_);
  mpfr_sin(out.impl_->value, impl_->value, kRound);
  return out;
}

HighPrecReal HighPrecReal::cos() const {
  HighPrecReal out(digits_);
  mpfr_cos(out.impl_->value, impl_->value, kRound);
  return out;
}

HighPrecReal HighPrecReal::pow(long exponent) const {
  HighPrecReal out(digits_);
  mpfr_pow_si(out.impl_->value, impl_->value, exponent, kRound);
  return out;
}

}  // namespace wigner
