#include "wadd/xfloat.hpp"

#include <cmath>
#include <cstring>
#include <ostream>
#include <string>

#include "wadd/error.hpp"

namespace wadd {

namespace {

thread_local mpfr_prec_t tls_working_bits = digits_to_bits(kDefaultExtendedDigits);

}  // namespace

mpfr_prec_t digits_to_bits(int digits10) noexcept {
  if (digits10 < 1) digits10 = 1;
  return static_cast<mpfr_prec_t>(std::ceil(digits10 * 3.321928094887362)) + 2;
}

mpfr_prec_t working_bits() noexcept { return tls_working_bits; }

int working_digits() noexcept {
  return static_cast<int>(std::floor((tls_working_bits - 2) * 0.30102999566398120));
}

PrecisionScope::PrecisionScope(int digits10) : saved_(tls_working_bits) {
  if (digits10 < 1) {
    throw Error(ErrorKind::InvalidArgument, "precision must be at least one digit");
  }
  tls_working_bits = digits_to_bits(digits10);
}

PrecisionScope::~PrecisionScope() { tls_working_bits = saved_; }

xfloat::xfloat(double v) {
  init_raw(working_bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
}

xfloat::xfloat(std::string_view decimal) {
  init_raw(working_bits());
  std::string s(decimal);
  if (s.empty() || mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw Error(ErrorKind::InvalidArgument, "not a decimal number: '" + s + "'");
  }
}

xfloat::xfloat(const xfloat& other) {
  init_raw(other.live() ? other.precision_bits() : working_bits());
  if (other.live()) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
  } else {
    mpfr_set_zero(v_, 1);
  }
}

xfloat::xfloat(xfloat&& other) noexcept {
  std::memcpy(v_, other.v_, sizeof(v_));
  other.v_->_mpfr_d = nullptr;
}

xfloat& xfloat::operator=(const xfloat& other) {
  if (this == &other) return *this;
  const mpfr_prec_t bits = other.live() ? other.precision_bits() : working_bits();
  if (!live()) {
    init_raw(bits);
  } else if (precision_bits() != bits) {
    mpfr_set_prec(v_, bits);
  }
  if (other.live()) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
  } else {
    mpfr_set_zero(v_, 1);
  }
  return *this;
}

xfloat& xfloat::operator=(xfloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

xfloat::~xfloat() {
  if (live()) mpfr_clear(v_);
}

std::string xfloat::str(int digits10) const {
  if (digits10 <= 0) {
    digits10 = static_cast<int>(std::ceil(precision_bits() * 0.30102999566398120));
  }
  const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits10, v_);
  std::string out(static_cast<size_t>(n) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), "%.*Rg", digits10, v_);
  out.resize(static_cast<size_t>(n));
  return out;
}

xfloat xfloat::pi() {
  xfloat r = raw();
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

xfloat xfloat::euler() {
  xfloat r = raw();
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

xfloat xfloat::ln2() {
  xfloat r = raw();
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

xfloat xfloat::epsilon() {
  xfloat r = raw();
  mpfr_set_ui_2exp(r.v_, 1, -static_cast<long>(working_bits()) + 1, MPFR_RNDN);
  return r;
}

xfloat xfloat::operator-() const {
  xfloat r = raw();
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

template <class Op>
xfloat& xfloat::compound(const xfloat& b, Op op) {
  if (live() && precision_bits() == working_bits()) {
    op(v_, v_, b.v_, MPFR_RNDN);
  } else {
    xfloat r = raw();
    op(r.v_, v_, b.v_, MPFR_RNDN);
    mpfr_swap(v_, r.v_);
  }
  return *this;
}

xfloat& xfloat::operator+=(const xfloat& b) { return compound(b, mpfr_add); }
xfloat& xfloat::operator-=(const xfloat& b) { return compound(b, mpfr_sub); }
xfloat& xfloat::operator*=(const xfloat& b) { return compound(b, mpfr_mul); }
xfloat& xfloat::operator/=(const xfloat& b) { return compound(b, mpfr_div); }

#define WADD_XFLOAT_BINARY(OP, FN, FN_D, FN_DL)                   \
  xfloat operator OP(const xfloat& a, const xfloat& b) {          \
    xfloat r = xfloat::raw();                                     \
    FN(r.v_, a.v_, b.v_, MPFR_RNDN);                              \
    return r;                                                     \
  }                                                               \
  xfloat operator OP(const xfloat& a, double b) {                 \
    xfloat r = xfloat::raw();                                     \
    FN_D(r.v_, a.v_, b, MPFR_RNDN);                               \
    return r;                                                     \
  }                                                               \
  xfloat operator OP(double a, const xfloat& b) {                 \
    xfloat r = xfloat::raw();                                     \
    FN_DL(r.v_, a, b.v_, MPFR_RNDN);                              \
    return r;                                                     \
  }

namespace {
int add_d_left(mpfr_ptr r, double a, mpfr_srcptr b, mpfr_rnd_t rnd) {
  return mpfr_add_d(r, b, a, rnd);
}
int mul_d_left(mpfr_ptr r, double a, mpfr_srcptr b, mpfr_rnd_t rnd) {
  return mpfr_mul_d(r, b, a, rnd);
}
}  // namespace

WADD_XFLOAT_BINARY(+, mpfr_add, mpfr_add_d, add_d_left)
WADD_XFLOAT_BINARY(-, mpfr_sub, mpfr_sub_d, mpfr_d_sub)
WADD_XFLOAT_BINARY(*, mpfr_mul, mpfr_mul_d, mul_d_left)
WADD_XFLOAT_BINARY(/, mpfr_div, mpfr_div_d, mpfr_d_div)

#undef WADD_XFLOAT_BINARY

std::partial_ordering operator<=>(const xfloat& a, const xfloat& b) noexcept {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
       : c > 0 ? std::partial_ordering::greater
               : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const xfloat& a, double b) noexcept {
  if (mpfr_nan_p(a.v_) || std::isnan(b)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.v_, b);
  return c < 0 ? std::partial_ordering::less
       : c > 0 ? std::partial_ordering::greater
               : std::partial_ordering::equivalent;
}

#define WADD_XFLOAT_UNARY(NAME, FN)          \
  xfloat NAME(const xfloat& x) {             \
    xfloat r = xfloat::raw();                \
    FN(r.v_, x.v_, MPFR_RNDN);               \
    return r;                                \
  }

WADD_XFLOAT_UNARY(abs, mpfr_abs)
WADD_XFLOAT_UNARY(sqrt, mpfr_sqrt)
WADD_XFLOAT_UNARY(exp, mpfr_exp)
WADD_XFLOAT_UNARY(expm1, mpfr_expm1)
WADD_XFLOAT_UNARY(log, mpfr_log)
WADD_XFLOAT_UNARY(log1p, mpfr_log1p)
WADD_XFLOAT_UNARY(log10, mpfr_log10)
WADD_XFLOAT_UNARY(sin, mpfr_sin)
WADD_XFLOAT_UNARY(cos, mpfr_cos)
WADD_XFLOAT_UNARY(tan, mpfr_tan)
WADD_XFLOAT_UNARY(sinh, mpfr_sinh)
WADD_XFLOAT_UNARY(cosh, mpfr_cosh)
WADD_XFLOAT_UNARY(atan, mpfr_atan)
WADD_XFLOAT_UNARY(tgamma, mpfr_gamma)

#undef WADD_XFLOAT_UNARY

xfloat lgamma(const xfloat& x) {
  xfloat r = xfloat::raw();
  int sign = 0;
  mpfr_lgamma(r.v_, &sign, x.v_, MPFR_RNDN);
  return r;
}

xfloat floor(const xfloat& x) {
  xfloat r = xfloat::raw();
  mpfr_floor(r.v_, x.v_);
  return r;
}

xfloat ceil(const xfloat& x) {
  xfloat r = xfloat::raw();
  mpfr_ceil(r.v_, x.v_);
  return r;
}

xfloat round(const xfloat& x) {
  xfloat r = xfloat::raw();
  mpfr_round(r.v_, x.v_);
  return r;
}

xfloat trunc(const xfloat& x) {
  xfloat r = xfloat::raw();
  mpfr_trunc(r.v_, x.v_);
  return r;
}

xfloat atan2(const xfloat& y, const xfloat& x) {
  xfloat r = xfloat::raw();
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

xfloat hypot(const xfloat& x, const xfloat& y) {
  xfloat r = xfloat::raw();
  mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

xfloat pow(const xfloat& x, const xfloat& y) {
  xfloat r = xfloat::raw();
  mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

xfloat pow(const xfloat& x, long n) {
  xfloat r = xfloat::raw();
  mpfr_pow_si(r.v_, x.v_, n, MPFR_RNDN);
  return r;
}

xfloat ldexp(const xfloat& x, long e) {
  xfloat r = xfloat::raw();
  mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const xfloat& x) {
  const auto p = os.precision();
  return os << x.str(p > 0 ? static_cast<int>(p) : 0);
}

}  // namespace wadd
