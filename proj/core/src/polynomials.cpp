#include "wadd/polynomials.hpp"

#include <cmath>

namespace wadd {

namespace {

// P_l^m for m >= 0.
double assoc_legendre_pos(int l, int m, double x) {
  double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  double pmm = 1.0;
  for (int k = 1; k <= m; ++k) pmm *= -static_cast<double>(2 * k - 1) * s;
  if (l == m) return pmm;
  double pm1 = x * static_cast<double>(2 * m + 1) * pmm;
  if (l == m + 1) return pm1;
  double p0 = pmm;
  double p1 = pm1;
  for (int k = m + 2; k <= l; ++k) {
    double p2 = (x * static_cast<double>(2 * k - 1) * p1 - static_cast<double>(k + m - 1) * p0) /
                static_cast<double>(k - m);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

// (l-m)!/(l+m)! for m >= 0.
double factorial_ratio(int l, int m) {
  return std::exp(std::lgamma(l - m + 1.0) - std::lgamma(l + m + 1.0));
}

}  // namespace

double legendre_p(int l, int m, double x) {
  if (l < 0 || std::abs(m) > l) {
    throw Error(ErrorKind::IndexOutOfRange, "associated Legendre needs 0 <= |m| <= l");
  }
  if (!(std::abs(x) <= 1.0)) throw Error(ErrorKind::IndexOutOfRange, "Legendre argument outside [-1, 1]");
  if (m >= 0) return assoc_legendre_pos(l, m, x);
  const int am = -m;
  double v = factorial_ratio(l, am) * assoc_legendre_pos(l, am, x);
  return (am % 2 != 0) ? -v : v;
}

double laguerre_checked(int n, double alpha, double x) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "Laguerre degree must be >= 0");
  if (!(alpha > -1.0)) throw Error(ErrorKind::IndexOutOfRange, "Laguerre alpha must exceed -1");
  return laguerre(n, alpha, x);
}

double gegenbauer_checked(int l, double mu, double x) {
  if (l < 0) throw Error(ErrorKind::IndexOutOfRange, "Gegenbauer degree must be >= 0");
  if (!(mu > 0.0)) throw Error(ErrorKind::IndexOutOfRange, "Gegenbauer parameter must be > 0");
  if (!(std::abs(x) <= 1.0)) throw Error(ErrorKind::IndexOutOfRange, "Gegenbauer argument outside [-1, 1]");
  return gegenbauer_c(l, mu, x);
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) {
    throw Error(ErrorKind::IndexOutOfRange, "spherical harmonic needs 0 <= |m| <= l");
  }
  const int am = std::abs(m);
  double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI) * factorial_ratio(l, am));
  double p = assoc_legendre_pos(l, am, std::cos(theta));
  std::complex<double> y = norm * p * std::polar(1.0, am * phi);
  if (m < 0) {
    y = std::conj(y);
    if (am % 2 != 0) y = -y;
  }
  return y;
}

}  // namespace wadd
