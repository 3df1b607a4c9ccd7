#pragma once

#include <cmath>
#include <complex>

#include "wadd/error.hpp"

namespace wadd {

// Classical orthogonal polynomials by three-term recurrence. The templates
// accept double, std::complex<double>, xfloat and mpq_class arguments.

/// Legendre polynomial P_l(x).
template <class S>
S legendre_p(int l, const S& x) {
  if (l < 0) throw Error(ErrorKind::IndexOutOfRange, "Legendre degree must be >= 0");
  S p0(1);
  if (l == 0) return p0;
  S p1 = x;
  for (int k = 1; k < l; ++k) {
    S p2 = (S(2 * k + 1) * x * p1 - S(k) * p0) / S(k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Associated Legendre function P_l^m(x) on [-1, 1] with the Condon-Shortley
/// phase; negative m uses P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
double legendre_p(int l, int m, double x);

/// Gegenbauer polynomial C_l^{(mu)}(x).
template <class S, class A>
S gegenbauer_c(int l, const A& mu, const S& x) {
  if (l < 0) throw Error(ErrorKind::IndexOutOfRange, "Gegenbauer degree must be >= 0");
  S c0(1);
  if (l == 0) return c0;
  const S m(mu);
  S c1 = S(2) * m * x;
  for (int k = 2; k <= l; ++k) {
    S c2 = (S(2) * x * (S(k - 1) + m) * c1 - (S(k - 2) + S(2) * m) * c0) / S(k);
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

/// Generalized Laguerre polynomial L_n^{alpha}(x); L_n^alpha = 0 for n < 0.
template <class S, class A>
S laguerre(int n, const A& alpha, const S& x) {
  if (n < 0) return S(0);
  S l0(1);
  if (n == 0) return l0;
  const S a(alpha);
  S l1 = S(1) + a - x;
  for (int k = 1; k < n; ++k) {
    S l2 = ((S(2 * k + 1) + a - x) * l1 - (S(k) + a) * l0) / S(k + 1);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

/// Checked Laguerre entry point used by the CLI: n >= 0 and alpha > -1.
double laguerre_checked(int n, double alpha, double x);
double gegenbauer_checked(int l, double mu, double x);

/// Normalized spherical harmonic Y_l^m(theta, phi).
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

}  // namespace wadd
