#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace wadd {

/// Decimal digits used for extended precision when nothing else is requested.
inline constexpr int kDefaultExtendedDigits = 60;

/// Current working precision of the calling thread, in decimal digits.
int working_digits() noexcept;

/// Current working precision of the calling thread, in bits.
mpfr_prec_t working_bits() noexcept;

mpfr_prec_t digits_to_bits(int digits10) noexcept;

/// Sets the calling thread's working precision for the lifetime of the scope.
/// Scopes nest; the previous precision is restored on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits10);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Extended-precision real number.
///
/// Values created by construction or arithmetic carry the working precision
/// of the thread that created them; copies are exact. Conversions from
/// built-in types are explicit so that double arithmetic is never silently
/// promoted.
class xfloat {
 public:
  xfloat() { init_zero(); }
  explicit xfloat(double v);
  template <std::integral I>
  explicit xfloat(I v) {
    init_raw(working_bits());
    if constexpr (std::is_signed_v<I>) {
      mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
    } else {
      mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
    }
  }
  /// Parses a decimal string such as "1.5e-3"; throws Error on bad input.
  explicit xfloat(std::string_view decimal);

  xfloat(const xfloat& other);
  xfloat(xfloat&& other) noexcept;
  xfloat& operator=(const xfloat& other);
  xfloat& operator=(xfloat&& other) noexcept;
  ~xfloat();

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }
  mpfr_prec_t precision_bits() const noexcept { return mpfr_get_prec(v_); }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  explicit operator double() const noexcept { return to_double(); }
  long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Decimal representation with `digits10` significant digits (0 = all
  /// digits carried by the value).
  std::string str(int digits10 = 0) const;

  static xfloat pi();
  static xfloat euler();
  static xfloat ln2();
  /// Unit roundoff at the working precision.
  static xfloat epsilon();

  xfloat operator-() const;
  xfloat& operator+=(const xfloat& b);
  xfloat& operator-=(const xfloat& b);
  xfloat& operator*=(const xfloat& b);
  xfloat& operator/=(const xfloat& b);

  friend xfloat operator+(const xfloat& a, const xfloat& b);
  friend xfloat operator-(const xfloat& a, const xfloat& b);
  friend xfloat operator*(const xfloat& a, const xfloat& b);
  friend xfloat operator/(const xfloat& a, const xfloat& b);
  friend xfloat operator+(const xfloat& a, double b);
  friend xfloat operator-(const xfloat& a, double b);
  friend xfloat operator*(const xfloat& a, double b);
  friend xfloat operator/(const xfloat& a, double b);
  friend xfloat operator+(double a, const xfloat& b);
  friend xfloat operator-(double a, const xfloat& b);
  friend xfloat operator*(double a, const xfloat& b);
  friend xfloat operator/(double a, const xfloat& b);

  template <std::integral I>
  friend xfloat operator+(const xfloat& a, I b) { return a + xfloat(b); }
  template <std::integral I>
  friend xfloat operator-(const xfloat& a, I b) { return a - xfloat(b); }
  template <std::integral I>
  friend xfloat operator*(const xfloat& a, I b) {
    xfloat r = raw();
    mpfr_mul_si(r.v_, a.v_, static_cast<long>(b), MPFR_RNDN);
    return r;
  }
  template <std::integral I>
  friend xfloat operator/(const xfloat& a, I b) {
    xfloat r = raw();
    mpfr_div_si(r.v_, a.v_, static_cast<long>(b), MPFR_RNDN);
    return r;
  }
  template <std::integral I>
  friend xfloat operator+(I a, const xfloat& b) { return xfloat(a) + b; }
  template <std::integral I>
  friend xfloat operator-(I a, const xfloat& b) { return xfloat(a) - b; }
  template <std::integral I>
  friend xfloat operator*(I a, const xfloat& b) { return b * a; }
  template <std::integral I>
  friend xfloat operator/(I a, const xfloat& b) { return xfloat(a) / b; }

  friend bool operator==(const xfloat& a, const xfloat& b) noexcept {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const xfloat& a, const xfloat& b) noexcept;
  friend bool operator==(const xfloat& a, double b) noexcept {
    return !mpfr_nan_p(a.v_) && mpfr_cmp_d(a.v_, b) == 0;
  }
  friend std::partial_ordering operator<=>(const xfloat& a, double b) noexcept;

  friend xfloat abs(const xfloat& x);
  friend xfloat fabs(const xfloat& x) { return abs(x); }
  friend xfloat sqrt(const xfloat& x);
  friend xfloat exp(const xfloat& x);
  friend xfloat expm1(const xfloat& x);
  friend xfloat log(const xfloat& x);
  friend xfloat log1p(const xfloat& x);
  friend xfloat log10(const xfloat& x);
  friend xfloat sin(const xfloat& x);
  friend xfloat cos(const xfloat& x);
  friend xfloat tan(const xfloat& x);
  friend xfloat sinh(const xfloat& x);
  friend xfloat cosh(const xfloat& x);
  friend xfloat atan(const xfloat& x);
  friend xfloat atan2(const xfloat& y, const xfloat& x);
  friend xfloat hypot(const xfloat& x, const xfloat& y);
  friend xfloat pow(const xfloat& x, const xfloat& y);
  friend xfloat pow(const xfloat& x, long n);
  friend xfloat floor(const xfloat& x);
  friend xfloat ceil(const xfloat& x);
  friend xfloat round(const xfloat& x);
  friend xfloat trunc(const xfloat& x);
  friend xfloat ldexp(const xfloat& x, long e);
  /// Real gamma and log|gamma| from MPFR.
  friend xfloat tgamma(const xfloat& x);
  friend xfloat lgamma(const xfloat& x);
  friend bool isfinite(const xfloat& x) noexcept { return mpfr_number_p(x.v_) != 0; }
  friend bool isnan(const xfloat& x) noexcept { return mpfr_nan_p(x.v_) != 0; }
  friend bool isinf(const xfloat& x) noexcept { return mpfr_inf_p(x.v_) != 0; }
  friend bool signbit(const xfloat& x) noexcept { return mpfr_signbit(x.v_) != 0; }

  friend std::ostream& operator<<(std::ostream& os, const xfloat& x);

 private:
  struct RawTag {};
  explicit xfloat(RawTag) { init_raw(working_bits()); }
  static xfloat raw() { return xfloat(RawTag{}); }

  void init_raw(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  void init_zero() {
    init_raw(working_bits());
    mpfr_set_zero(v_, 1);
  }
  bool live() const noexcept { return v_->_mpfr_d != nullptr; }

  template <class Op>
  xfloat& compound(const xfloat& b, Op op);

  mpfr_t v_;
};

}  // namespace wadd
