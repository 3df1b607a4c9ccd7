#pragma once

#include <cmath>
#include <type_traits>

#include "wadd/complex.hpp"
#include "wadd/error.hpp"

namespace wadd::detail {

/// Result of one kernel run at a fixed precision.
template <class T>
struct Attempt {
  Complex<T> value;
  double cond = 1.0;  // sum |terms| / |value|
  long terms = 0;
};

/// Diagnostics reported by the escalating front-ends.
struct Diag {
  long terms = 0;
  double cond = 1.0;
  int digits = 16;
};

inline constexpr int kMaxDigits = 4000;

template <class W, class T>
W cvt(const T& v) {
  if constexpr (std::is_same_v<W, T>) {
    return v;
  } else if constexpr (std::is_same_v<W, double>) {
    return num::to_double(v);
  } else {
    return W(v);
  }
}

template <class W, class T>
Complex<W> cvt(const Complex<T>& z) {
  return {cvt<W>(z.re), cvt<W>(z.im)};
}

/// Magnitude proxy |re| + |im| kept in T so that it never overflows.
template <class T>
T mag1(const Complex<T>& z) {
  using std::abs;
  return abs(z.re) + abs(z.im);
}

template <class T>
double ratio_to_double(const T& num_, const T& den) {
  if (den == T(0)) return num_ == T(0) ? 1.0 : INFINITY;
  double r = num::to_double(num_ / den);
  return r < 1.0 ? 1.0 : r;
}

/// Runs `kernel` (a generic lambda templated on the working scalar) at
/// increasing precision until the reported condition number leaves enough
/// digits for the caller's type T.
///
/// T = double: one attempt in double, accepted when cond <= 1e3 and the value
/// is finite; otherwise xfloat with 16 + log10(cond) + 10 digits.
/// T = xfloat: starts at working digits + 10.
template <class T, class F>
Complex<T> escalate(F&& kernel, Diag* diag) {
  const bool is_double = std::is_same_v<T, double>;
  const int target = is_double ? 16 : working_digits();
  double cond = 1.0;
  if constexpr (std::is_same_v<T, double>) {
    Attempt<double> at = kernel.template operator()<double>();
    if (num::isfinite(at.value) && std::isfinite(at.cond) && at.cond <= 1e3) {
      if (diag) *diag = {at.terms, at.cond, 16};
      return at.value;
    }
    if (std::isfinite(at.cond) && num::isfinite(at.value)) cond = at.cond;
  }
  int digits = target + 10 + static_cast<int>(std::ceil(std::log10(cond)));
  for (int iter = 0; iter < 16; ++iter) {
    if (digits > kMaxDigits) break;
    Attempt<xfloat> at;
    {
      PrecisionScope scope(digits);
      at = kernel.template operator()<xfloat>();
    }
    const bool finite_cond = std::isfinite(at.cond);
    const double lc = finite_cond ? std::log10(at.cond) : 0.0;
    if (finite_cond && num::isfinite(at.value) && lc + target + 3 <= digits) {
      if (diag) *diag = {at.terms, at.cond, digits};
      if constexpr (std::is_same_v<T, double>) {
        Complex<double> v = cvt<double>(at.value);
        if (!num::isfinite(v)) {
          throw Error(ErrorKind::Overflow, "result exceeds the double range");
        }
        return v;
      } else {
        return at.value;
      }
    }
    // At a zero of the function no precision gives relative accuracy; once
    // 50 extra digits still leave the sum below the rounding level of its
    // terms, return it with absolute accuracy.
    const bool at_zero = !finite_cond || lc >= digits - 3;
    if (at_zero && digits >= target + 50 && num::isfinite(at.value)) {
      if (diag) *diag = {at.terms, at.cond, digits};
      if constexpr (std::is_same_v<T, double>) {
        return cvt<double>(at.value);
      } else {
        return at.value;
      }
    }
    int next = finite_cond ? target + 10 + static_cast<int>(std::ceil(lc)) : 2 * digits;
    if (next <= digits) next = digits + digits / 2;
    digits = next;
  }
  throw Error(ErrorKind::PrecisionExhausted,
              "cancellation exceeds " + std::to_string(kMaxDigits) + " digits");
}

/// Neumaier compensated accumulator for double; plain addition otherwise.
template <class T>
struct Accumulator {
  Complex<T> s{T(0), T(0)};
  Complex<T> c{T(0), T(0)};

  void add(const Complex<T>& x) {
    if constexpr (std::is_same_v<T, double>) {
      add_part(s.re, c.re, x.re);
      add_part(s.im, c.im, x.im);
    } else {
      s += x;
    }
  }
  Complex<T> value() const {
    if constexpr (std::is_same_v<T, double>) {
      return s + c;
    } else {
      return s;
    }
  }

 private:
  static void add_part(double& sum, double& comp, double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
};

}  // namespace wadd::detail
