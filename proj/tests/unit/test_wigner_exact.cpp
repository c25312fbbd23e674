#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "wigner/angular_core.hpp"
#include "wigner/error.hpp"
#include "wigner/high_precision.hpp"
#include "wigner/wigner_exact.hpp"

using namespace wigner;

TEST_CASE("HighPrecReal arithmetic") {
  const HighPrecReal third = HighPrecReal::from_integer(1, 50) / 3;
  CHECK(std::stod(third.to_string(20)) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  const HighPrecReal two(2.0, 50);
  const HighPrecReal root = two.sqrt();
  const HighPrecReal back = root * root - two;
  CHECK(back.log10_abs() < -48.0);
  CHECK(HighPrecReal::factorial(20).to_double() == 2432902008176640000.0);
  const HighPrecReal x(0.7, 60);
  const HighPrecReal one = x.sin() * x.sin() + x.cos() * x.cos();
  CHECK((one - HighPrecReal(1.0)).log10_abs() < -58.0);
  CHECK(HighPrecReal(3.0).pow(4).to_double() == 81.0);
  CHECK((-x).sign() == -1);
  CHECK(HighPrecReal(0.0).is_zero());
  CHECK(HighPrecReal(1.0) < HighPrecReal(2.0));

  HighPrecReal copy = x;
  HighPrecReal moved = std::move(copy);
  CHECK(moved.to_double() == 0.7);
  CHECK(moved.digits() == 60);
}

TEST_CASE("rotation by zero is the identity") {
  for (int two_j : {0, 1, 6, 4001}) {
    for (int a = -two_j; a <= two_j; a += std::max(2, two_j / 2 * 2)) {
      for (int b = -two_j; b <= two_j; b += std::max(2, two_j / 2 * 2)) {
        CHECK(d_exact(make_index(two_j, a, b), Angle(0.0)) == (a == b ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("closed forms for small and stretched indices") {
  for (double t : {1e-6, 0.01, 0.4, 1.3, 2.9}) {
    const Angle th(t);
    CHECK(d_exact(make_index(1, 1, 1), th) == doctest::Approx(std::cos(0.5 * t)).epsilon(1e-15));
    CHECK(d_exact(make_index(2, 0, 0), th) ==
          doctest::Approx(std::cos(t)).epsilon(1e-13).scale(1.0));
    for (int j : {3, 20, 200}) {
      const double expected = std::pow(std::cos(0.5 * t), 2 * j);
      CHECK(std::abs(d_exact(make_index(2 * j, 2 * j, 2 * j), th) - expected) <
            1e-13 * std::max(expected, 1e-300) + 1e-300);
    }
  }
}

TEST_CASE("series examples") {
  for (double t : {1e-3, 0.5, 2.0}) {
    CHECK(d_series_highprec(make_index(1, 1, -1), Angle(t)) ==
          doctest::Approx(-std::sin(0.5 * t)).epsilon(1e-15));
  }
  CHECK(std::abs(d_series_highprec(make_index(20, 0, 0), Angle(0.5)) -
                 legendre_p(10, std::cos(0.5))) < 1e-14);
  CHECK(std::abs(d_series_highprec(make_index(100, 6, -4), Angle(0.3)) -
                 d_exact(make_index(100, 6, -4), Angle(0.3))) < 1e-12);
}

TEST_CASE("series rejects too few digits and reports exhausted precision") {
  try {
    d_series_highprec(make_index(4, 0, 0), Angle(0.3), 20);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParameter);
  }
  // heavy alternating cancellation at j = 400 near pi/2 with only 30 digits
  try {
    d_series_highprec(make_index(800, 0, 0), Angle(1.5), 30);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrecisionExhausted);
  }
  // the same element succeeds once the working precision covers it
  const double v = d_series_highprec(make_index(800, 0, 0), Angle(1.5), 400);
  CHECK(std::abs(v - legendre_p(400, std::cos(1.5))) < 1e-13);
}

TEST_CASE("legendre values") {
  for (double x : {-1.0, -0.3, 0.0, 0.77, 1.0}) {
    CHECK(legendre_p(0, x) == 1.0);
    CHECK(legendre_p(1, x) == x);
  }
  for (int l : {0, 5, 100, 5000}) CHECK(legendre_p(l, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  double worst = 0.0;
  for (int l = 0; l <= 20; ++l) {
    for (double x : {-0.95, -0.5, 0.1, 0.6, 0.99}) {
      worst = std::max(worst, std::abs(legendre_p(l, x) - oracle::legendre_explicit(l, x)));
    }
  }
  CHECK(worst < 1e-13);
  worst = 0.0;
  for (int l : {100, 1000, 5000}) {
    for (double x : {-0.999, -0.3, 0.25, 0.875, 0.999}) {
      worst = std::max(worst, std::abs(legendre_p(l, x) - oracle::legendre_long_double(l, 1.0 - x)));
    }
  }
  CHECK(worst < 1e-12);
  CHECK_THROWS_AS(legendre_p(-1, 0.0), Error);
  CHECK_THROWS_AS(legendre_p(2, 1.5), Error);
}

TEST_CASE("complement form against an extended-precision recurrence") {
  double worst = 0.0;
  for (int l : {0, 1, 7, 300, 3000}) {
    for (double u : {0.0, 1e-8, 1e-3, 0.25, 1.0, 1.9, 2.0}) {
      worst = std::max(worst, std::abs(legendre_p_complement(l, u) - oracle::legendre_long_double(l, u)));
    }
  }
  CHECK(worst < 1e-13);
  // rounding 1 - u costs the plain recurrence l^2 ulp-sized shifts; the complement form avoids it
  const double u_small = 1e-8;
  const double truth = oracle::legendre_long_double(3000, u_small);
  CHECK(std::abs(legendre_p_complement(3000, u_small) - truth) <
        std::abs(legendre_p(3000, 1.0 - u_small) - truth));
  // near u = 0, P_l(1 - u) = 1 - l(l+1) u / 2 + ...
  const double u = 1e-14;
  CHECK(legendre_p_complement(100, u) == doctest::Approx(1.0 - 5050.0 * u).epsilon(1e-16));
  CHECK_THROWS_AS(legendre_p_complement(3, -0.1), Error);
  CHECK_THROWS_AS(legendre_p_complement(3, 2.1), Error);
}

TEST_CASE("recurrence agrees with the high-precision series for j <= 12") {
  // the full sweep to j = 50 lives in the acceptance suite
  double worst = 0.0;
  for (int two_j = 0; two_j <= 24; ++two_j) {
    for (double t : {1e-4, 1e-2, 0.3, 1.5, 3.0}) {
      for (int a = -two_j; a <= two_j; a += 2) {
        for (int b = -two_j; b <= two_j; b += 2) {
          const auto idx = make_index(two_j, a, b);
          worst = std::max(worst, std::abs(d_exact(idx, Angle(t)) -
                                           d_series_highprec(idx, Angle(t))));
        }
      }
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("unitarity of rows") {
  for (int j : {10, 100}) {
    for (int m1 : {0, j / 2, j}) {
      for (double t : {0.001, 0.1, 1.0}) {
        double sum = 0.0;
        for (int m2 = -j; m2 <= j; ++m2) {
          const double v = d_exact(make_index(2 * j, 2 * m1, 2 * m2), Angle(t));
          sum += v * v;
        }
        CHECK(std::abs(sum - 1.0) < 1e-10);
      }
    }
  }
  // half-integer row
  double sum = 0.0;
  for (int b = -41; b <= 41; b += 2) {
    const double v = d_exact(make_index(41, 3, b), Angle(0.8));
    sum += v * v;
  }
  CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("swap symmetry") {
  double worst = 0.0;
  for (int two_j : {7, 40, 301, 2000}) {
    for (double t : {0.001, 0.2, 1.1, 2.5}) {
      for (int a = -two_j; a <= two_j; a += std::max(2, two_j / 5 * 2)) {
        for (int b = -two_j; b < a; b += std::max(2, two_j / 7 * 2)) {
          const double phase = (((a - b) / 2) % 2 == 0) ? 1.0 : -1.0;
          const double lhs = d_exact(make_index(two_j, a, b), Angle(t));
          const double rhs = d_exact(make_index(two_j, b, a), Angle(t));
          worst = std::max(worst, std::abs(lhs - phase * rhs));
        }
      }
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("zero projections reduce to Legendre polynomials up to l = 2000") {
  double worst = 0.0;
  for (int l = 0; l <= 2000; l += (l < 50 ? 1 : 37)) {
    for (double t : {1e-3, 0.05, 0.5, 1.2, 2.4}) {
      worst = std::max(worst, std::abs(d_exact(make_index(2 * l, 0, 0), Angle(t)) -
                                       legendre_p(l, std::cos(t))));
    }
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("half-integer element near the low-angle end") {
  const auto idx = make_index(4001, 5, 1);
  for (double t : {1e-4, 1e-3, 1e-2}) {
    const double series = d_series_highprec(idx, Angle(t), 200);
    CHECK(std::abs(d_exact(idx, Angle(t)) - series) < 1e-11);
  }
}

TEST_CASE("far off-diagonal elements underflow cleanly") {
  const double v = d_exact(make_index(4000, 4000, -4000), Angle(0.01));
  CHECK(v == 0.0);
  const double w = d_exact(make_index(400, 400, -400), Angle(2.0));
  const double expected = std::pow(std::sin(1.0), 400);
  CHECK(w == doctest::Approx(expected).epsilon(1e-12));
}
