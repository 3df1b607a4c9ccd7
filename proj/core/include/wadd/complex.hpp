#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include "wadd/xfloat.hpp"

namespace wadd {

/// Complex number over a real scalar T (double or xfloat).
///
/// std::complex is only specified for the built-in floating types, so the
/// extended-precision code paths use this minimal replacement.
template <class T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  explicit Complex(const T& r) : re(r), im(T(0)) {}
  Complex(const T& r, const T& i) : re(r), im(i) {}

  Complex& operator+=(const Complex& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  Complex& operator-=(const Complex& b) {
    re -= b.re;
    im -= b.im;
    return *this;
  }
  Complex& operator*=(const Complex& b) { return *this = *this * b; }
  Complex& operator/=(const Complex& b) { return *this = *this / b; }
  Complex& operator*=(const T& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const T& s) {
    re /= s;
    im /= s;
    return *this;
  }

  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    // Smith's algorithm.
    using std::abs;
    if (abs(b.re) >= abs(b.im)) {
      if (b.im == T(0)) return {a.re / b.re, a.im / b.re};
      T q = b.im / b.re;
      T d = b.re + b.im * q;
      return {(a.re + a.im * q) / d, (a.im - a.re * q) / d};
    }
    T q = b.re / b.im;
    T d = b.re * q + b.im;
    return {(a.re * q + a.im) / d, (a.im * q - a.re) / d};
  }
  friend Complex operator+(const Complex& a, const T& s) { return {a.re + s, a.im}; }
  friend Complex operator-(const Complex& a, const T& s) { return {a.re - s, a.im}; }
  friend Complex operator*(const Complex& a, const T& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const T& s) { return {a.re / s, a.im / s}; }
  friend Complex operator+(const T& s, const Complex& a) { return {s + a.re, a.im}; }
  friend Complex operator-(const T& s, const Complex& a) { return {s - a.re, -a.im}; }
  friend Complex operator*(const T& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const T& s, const Complex& a) { return Complex(s) / a; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

using XComplex = Complex<xfloat>;

/// Scalar helpers shared by the double and xfloat instantiations.
namespace num {

template <class T>
T from_double(double v) {
  return T(v);
}

inline double to_double(double v) { return v; }
inline double to_double(const xfloat& v) { return v.to_double(); }

/// Unit roundoff of T at the current working precision.
template <class T>
T epsilon() {
  if constexpr (std::is_same_v<T, double>) {
    return 0x1p-53;
  } else {
    return xfloat::epsilon();
  }
}

template <class T>
T pi() {
  if constexpr (std::is_same_v<T, double>) {
    return 3.14159265358979323846;
  } else {
    return xfloat::pi();
  }
}

template <class T>
T euler_gamma() {
  if constexpr (std::is_same_v<T, double>) {
    return 0.57721566490153286061;
  } else {
    return xfloat::euler();
  }
}

/// Decimal digits carried by T right now.
template <class T>
int digits() {
  if constexpr (std::is_same_v<T, double>) {
    return 16;
  } else {
    return working_digits();
  }
}

template <class T>
Complex<T> cplx(double re, double im = 0.0) {
  return {T(re), T(im)};
}

template <class T>
Complex<T> from_std(std::complex<double> z) {
  return {T(z.real()), T(z.imag())};
}

template <class T>
std::complex<double> to_std(const Complex<T>& z) {
  return {to_double(z.re), to_double(z.im)};
}

template <class T>
T abs(const Complex<T>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

/// |z| as a double, saturating to +inf instead of overflowing the conversion.
template <class T>
double mag(const Complex<T>& z) {
  return to_double(abs(z));
}

template <class T>
T norm(const Complex<T>& z) {
  return z.re * z.re + z.im * z.im;
}

template <class T>
T arg(const Complex<T>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <class T>
Complex<T> conj(const Complex<T>& z) {
  return {z.re, -z.im};
}

template <class T>
bool isfinite(const Complex<T>& z) {
  using std::isfinite;
  return isfinite(z.re) && isfinite(z.im);
}

template <class T>
bool is_real(const Complex<T>& z) {
  return z.im == T(0);
}

template <class T>
Complex<T> exp(const Complex<T>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  T e = exp(z.re);
  if (z.im == T(0)) return Complex<T>(e);
  return {e * cos(z.im), e * sin(z.im)};
}

/// Principal branch.
template <class T>
Complex<T> log(const Complex<T>& z) {
  using std::log;
  if (z.im == T(0) && z.re > T(0)) return Complex<T>(log(z.re));
  return {log(abs(z)), arg(z)};
}

template <class T>
Complex<T> sqrt(const Complex<T>& z) {
  using std::abs;
  using std::sqrt;
  if (z.im == T(0)) {
    if (z.re >= T(0)) return Complex<T>(sqrt(z.re));
    return {T(0), sqrt(-z.re)};
  }
  T m = abs(z);
  T t = sqrt((m + abs(z.re)) / T(2));
  if (z.re >= T(0)) return {t, z.im / (T(2) * t)};
  return {abs(z.im) / (T(2) * t), z.im < T(0) ? -t : t};
}

/// Principal value of z^w; 0^w = 0 for Re w > 0.
template <class T>
Complex<T> pow(const Complex<T>& z, const Complex<T>& w) {
  if (z.re == T(0) && z.im == T(0)) {
    if (w.re == T(0) && w.im == T(0)) return Complex<T>(T(1));
    return Complex<T>(T(0));
  }
  if (w.im == T(0) && z.im == T(0) && z.re > T(0)) {
    using std::pow;
    return Complex<T>(pow(z.re, w.re));
  }
  return exp(w * log(z));
}

/// x^w for real x > 0 and complex w.
template <class T>
Complex<T> pow(const T& x, const Complex<T>& w) {
  using std::log;
  if (w.im == T(0)) {
    using std::pow;
    return Complex<T>(pow(x, w.re));
  }
  return exp(w * log(x));
}

template <class T>
Complex<T> powi(Complex<T> z, long n) {
  Complex<T> r(T(1));
  bool inv = n < 0;
  unsigned long m = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (m) {
    if (m & 1u) r = r * z;
    z = z * z;
    m >>= 1u;
  }
  return inv ? Complex<T>(T(1)) / r : r;
}

template <class T>
Complex<T> sin(const Complex<T>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class T>
Complex<T> cos(const Complex<T>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

/// Nearest integer if z is exactly a real integer, used for pole detection.
template <class T>
bool is_nonpositive_integer(const Complex<T>& z) {
  using std::floor;
  return z.im == T(0) && z.re <= T(0) && floor(z.re) == z.re;
}

template <class T>
bool is_integer(const Complex<T>& z) {
  using std::floor;
  return z.im == T(0) && floor(z.re) == z.re;
}

}  // namespace num

template <class T>
std::ostream& operator<<(std::ostream& os, const Complex<T>& z) {
  return os << '(' << z.re << ',' << z.im << ')';
}

}  // namespace wadd
