#include <gmpxx.h>
#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "wadd/error.hpp"
#include "wadd/polynomials.hpp"

namespace {

constexpr double pi = std::numbers::pi;

TEST(Legendre, EndpointAndQuadratic) {
  for (int l = 0; l <= 10; ++l) EXPECT_DOUBLE_EQ(wadd::legendre_p(l, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(wadd::legendre_p(2, 0.5), -0.125);
  EXPECT_THROW(wadd::legendre_p(-1, 0.5), wadd::Error);
}

TEST(Legendre, NegativeOrder) {
  const double x = 0.3;
  // 2!/8! = 1/20160
  EXPECT_NEAR(wadd::legendre_p(5, -3, x), -wadd::legendre_p(5, 3, x) / 20160.0, 1e-15);
  EXPECT_DOUBLE_EQ(wadd::legendre_p(4, 0, x), wadd::legendre_p(4, x));
  EXPECT_DOUBLE_EQ(wadd::legendre_p(3, 2, 1.0), 0.0);
  try {
    wadd::legendre_p(2, 3, 0.1);
    FAIL();
  } catch (const wadd::Error& e) {
    EXPECT_EQ(e.kind(), wadd::ErrorKind::IndexOutOfRange);
  }
}

TEST(Legendre, AssociatedClosedForm) {
  // P_2^1(x) = -3 x sqrt(1 - x^2) with the Condon-Shortley phase
  const double x = 0.4;
  EXPECT_NEAR(wadd::legendre_p(2, 1, x), -3 * x * std::sqrt(1 - x * x), 1e-15);
}

TEST(Gegenbauer, HalfIsLegendre) {
  EXPECT_NEAR(wadd::gegenbauer_c(4, 0.5, 0.2), wadd::legendre_p(4, 0.2), 1e-15);
}

TEST(Gegenbauer, Endpoints) {
  // (2 mu)_l / l!: 3*4*5/6 at mu = 3/2 and 4*5*6/6 at mu = 2
  EXPECT_NEAR(wadd::gegenbauer_c(3, 1.5, 1.0), 10.0, 1e-13);
  EXPECT_NEAR(wadd::gegenbauer_c(3, 2.0, 1.0), 20.0, 1e-13);
  EXPECT_NEAR(wadd::gegenbauer_c(3, 1.5, -1.0), -10.0, 1e-13);
  EXPECT_NEAR(wadd::gegenbauer_c(4, 1.5, -1.0), 15.0, 1e-12);
}

TEST(Gegenbauer, BoundedByEndpoint) {
  for (double mu : {0.5, 1.0, 2.5}) {
    for (int l = 0; l <= 60; ++l) {
      const double top = wadd::gegenbauer_c(l, mu, 1.0);
      for (int j = 0; j <= 80; ++j) {
        const double c = -1.0 + j / 40.0;
        EXPECT_LE(std::abs(wadd::gegenbauer_c(l, mu, c)), top * (1 + 1e-12))
            << "l=" << l << " mu=" << mu << " c=" << c;
      }
    }
  }
}

TEST(Gegenbauer, CheckedRejectsBadParameters) {
  EXPECT_THROW(wadd::gegenbauer_checked(2, -0.5, 0.1), wadd::Error);
  EXPECT_THROW(wadd::gegenbauer_checked(-1, 1.0, 0.1), wadd::Error);
}

TEST(Laguerre, ValuesAtZero) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_DOUBLE_EQ(wadd::laguerre(n, 0.0, 0.0), 1.0);
    EXPECT_DOUBLE_EQ(wadd::laguerre(n, 1.0, 0.0), n + 1.0);
  }
  EXPECT_EQ(wadd::laguerre(-1, 2.0, 0.7), 0.0);
}

TEST(Laguerre, ExactRational) {
  const mpq_class v = wadd::laguerre(3, 2, mpq_class(11, 10));
  EXPECT_EQ(v, mpq_class(10819, 6000));
}

TEST(Laguerre, CheckedRejectsBadParameters) {
  EXPECT_THROW(wadd::laguerre_checked(-2, 0.0, 1.0), wadd::Error);
  EXPECT_THROW(wadd::laguerre_checked(2, -1.5, 1.0), wadd::Error);
}

TEST(SphericalHarmonic, LowOrders) {
  const double y00 = 1 / std::sqrt(4 * pi);
  EXPECT_NEAR(std::abs(wadd::spherical_harmonic(0, 0, 0.4, 2.2) - y00), 0.0, 1e-16);
  EXPECT_NEAR(wadd::spherical_harmonic(1, 0, pi / 3, 0.9).real(), std::sqrt(3 / (4 * pi)) / 2,
              1e-15);
}

TEST(SphericalHarmonic, AdditionSum) {
  double s = 0;
  for (int m = -5; m <= 5; ++m) s += std::norm(wadd::spherical_harmonic(5, m, 0.7, 1.2));
  EXPECT_NEAR(s, 11 / (4 * pi), 1e-14);
}

TEST(SphericalHarmonic, Conjugation) {
  for (int l = 0; l <= 6; ++l) {
    for (int m = 0; m <= l; ++m) {
      const auto a = wadd::spherical_harmonic(l, -m, 1.1, 0.4);
      const auto b = std::conj(wadd::spherical_harmonic(l, m, 1.1, 0.4)) * double(m % 2 ? -1 : 1);
      EXPECT_NEAR(std::abs(a - b), 0.0, 1e-15);
    }
  }
  EXPECT_THROW(wadd::spherical_harmonic(2, 3, 0.1, 0.1), wadd::Error);
}

}  // namespace
