#include "wadd/special.hpp"

#include <cmath>

#include "detail/kummer.hpp"
#include "wadd/error.hpp"

namespace wadd {

namespace {

using detail::Diag;
using detail::KummerConfig;

Complex<double> in(ComplexScalar z) { return num::from_std<double>(z); }
ComplexScalar out(const Complex<double>& z) { return num::to_std(z); }

KummerConfig config(const KummerOptions& o) { return {o.max_terms, o.small_z_cutoff}; }

Evaluation make_eval(const Complex<double>& v, const Diag& d) {
  return {out(v), d.terms, d.cond, d.digits};
}

}  // namespace

ComplexScalar gamma(ComplexScalar z) { return out(detail::gamma<double>(in(z))); }
ComplexScalar rgamma(ComplexScalar z) { return out(detail::rgamma<double>(in(z))); }
ComplexScalar log_gamma(ComplexScalar z) { return out(detail::log_gamma<double>(in(z))); }
ComplexScalar digamma(ComplexScalar z) { return out(detail::digamma<double>(in(z))); }
XComplex gamma(const XComplex& z) { return detail::gamma<xfloat>(z); }
XComplex rgamma(const XComplex& z) { return detail::rgamma<xfloat>(z); }
XComplex log_gamma(const XComplex& z) { return detail::log_gamma<xfloat>(z); }
XComplex digamma(const XComplex& z) { return detail::digamma<xfloat>(z); }

ComplexScalar rising(ComplexScalar a, long n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "rising factorial needs n >= 0");
  ComplexScalar p = 1.0;
  for (long k = 0; k < n; ++k) p *= a + static_cast<double>(k);
  return p;
}

XComplex rising(const XComplex& a, long n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "rising factorial needs n >= 0");
  XComplex p(xfloat(1));
  for (long k = 0; k < n; ++k) p = p * (a + xfloat(k));
  return p;
}

ComplexScalar log_rising(ComplexScalar a, long n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "rising factorial needs n >= 0");
  double lm = 0.0;
  double ph = 0.0;
  for (long k = 0; k < n; ++k) {
    ComplexScalar f = a + static_cast<double>(k);
    if (f == 0.0) throw Error(ErrorKind::PoleHit, "zero factor in log-scaled rising product");
    lm += std::log(std::abs(f));
    ph += std::arg(f);
  }
  ph = std::remainder(ph, 2.0 * M_PI);
  return {lm, ph};
}

ComplexScalar rising_ratio(ComplexScalar a, ComplexScalar b, long n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "rising ratio needs n >= 0");
  ComplexScalar p = 1.0;
  for (long k = 0; k < n; ++k) {
    ComplexScalar den = b + static_cast<double>(k);
    if (den == 0.0) throw Error(ErrorKind::PoleHit, "rising ratio denominator factor is zero");
    p *= (a + static_cast<double>(k)) / den;
  }
  return p;
}

double binomial(long n, long k) {
  if (k < 0 || k > n) throw Error(ErrorKind::IndexOutOfRange, "binomial needs 0 <= k <= n");
  k = std::min(k, n - k);
  double r = 1.0;
  for (long j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
  return r < 9.0e15 ? std::round(r) : r;
}

ComplexScalar pochhammer_ratio(PochhammerKind kind, const PochhammerParams& p) {
  switch (kind) {
    case PochhammerKind::Rising:
      return rising(p.a, p.n);
    case PochhammerKind::LogRising:
      return log_rising(p.a, p.n);
    case PochhammerKind::GammaRatio:
      if (p.n > 30) return std::exp(log_rising(p.a, p.n));
      return rising(p.a, p.n);
    case PochhammerKind::RisingRatio:
      return rising_ratio(p.a, p.b, p.n);
    case PochhammerKind::Binomial:
      return binomial(p.n, p.k);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown Pochhammer kind");
}

ComplexScalar kummer_m(ComplexScalar a, ComplexScalar b, ComplexScalar z, const KummerOptions& o) {
  return out(detail::hyp1f1<double>(in(a), in(b), in(z), config(o)));
}

Evaluation kummer_m_eval(ComplexScalar a, ComplexScalar b, ComplexScalar z,
                         const KummerOptions& o) {
  Diag d;
  auto v = detail::hyp1f1<double>(in(a), in(b), in(z), config(o), &d);
  return make_eval(v, d);
}

XComplex kummer_m(const XComplex& a, const XComplex& b, const XComplex& z,
                  const KummerOptions& o) {
  return detail::hyp1f1<xfloat>(a, b, z, config(o));
}

ComplexScalar kummer_u(ComplexScalar a, ComplexScalar b, double z, const KummerOptions& o) {
  return out(detail::hypu<double>(in(a), in(b), z, config(o)));
}

Evaluation kummer_u_eval(ComplexScalar a, ComplexScalar b, double z, const KummerOptions& o) {
  Diag d;
  auto v = detail::hypu<double>(in(a), in(b), z, config(o), &d);
  return make_eval(v, d);
}

XComplex kummer_u(const XComplex& a, const XComplex& b, const xfloat& z, const KummerOptions& o) {
  return detail::hypu<xfloat>(a, b, z, config(o));
}

ComplexScalar whittaker_m(const WhittakerOrder& ord, double r, bool deriv,
                          const KummerOptions& o) {
  return whittaker_m_eval(ord, r, deriv, o).value;
}

Evaluation whittaker_m_eval(const WhittakerOrder& ord, double r, bool deriv,
                            const KummerOptions& o) {
  if (!(r >= 0.0)) throw Error(ErrorKind::InvalidArgument, "M requires r >= 0");
  Diag d;
  auto v = detail::whit_m<double>(in(ord.kappa), in(ord.mu), Complex<double>(r), deriv,
                                  config(o), &d);
  return make_eval(v, d);
}

ComplexScalar whittaker_m(const WhittakerOrder& ord, ComplexScalar z, const KummerOptions& o) {
  return out(detail::whit_m<double>(in(ord.kappa), in(ord.mu), in(z), false, config(o)));
}

ComplexScalar whittaker_m_reduced(const WhittakerOrder& ord, ComplexScalar z,
                                  const KummerOptions& o) {
  return out(detail::whit_m_reduced<double>(in(ord.kappa), in(ord.mu), in(z), config(o)));
}

ComplexScalar whittaker_w(const WhittakerOrder& ord, double r, bool deriv,
                          const KummerOptions& o) {
  return whittaker_w_eval(ord, r, deriv, o).value;
}

Evaluation whittaker_w_eval(const WhittakerOrder& ord, double r, bool deriv,
                            const KummerOptions& o) {
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "W requires r > 0");
  Diag d;
  auto v = detail::whit_w<double>(in(ord.kappa), in(ord.mu), r, deriv, config(o), &d);
  return make_eval(v, d);
}

XComplex whittaker_m(const XWhittakerOrder& ord, const xfloat& r, bool deriv,
                     const KummerOptions& o) {
  if (r < 0.0) throw Error(ErrorKind::InvalidArgument, "M requires r >= 0");
  return detail::whit_m<xfloat>(ord.kappa, ord.mu, XComplex(r), deriv, config(o));
}

XComplex whittaker_m_reduced(const XWhittakerOrder& ord, const XComplex& z,
                             const KummerOptions& o) {
  return detail::whit_m_reduced<xfloat>(ord.kappa, ord.mu, z, config(o));
}

XComplex whittaker_w(const XWhittakerOrder& ord, const xfloat& r, bool deriv,
                     const KummerOptions& o) {
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "W requires r > 0");
  return detail::whit_w<xfloat>(ord.kappa, ord.mu, r, deriv, config(o));
}

namespace {

template <class T>
void check_bessel_order(const T& nu) {
  using std::floor;
  T twice = nu * 2;
  if (!(twice >= 0.0) || floor(twice) != twice) {
    throw Error(ErrorKind::UnsupportedOrder, "bessel_modified needs 2*nu a non-negative integer");
  }
}

// I_nu(z)/z^nu = e^{-z} 1F1(nu+1/2; 2nu+1; 2z) / (2^nu Gamma(nu+1))
template <class T>
T i_scaled(const T& nu, const T& z) {
  check_bessel_order(nu);
  if (z < 0.0) throw Error(ErrorKind::InvalidArgument, "bessel_modified requires z >= 0");
  Complex<T> kap(T(0));
  Complex<T> mu(nu);
  Complex<T> red = detail::whit_m_reduced<T>(kap, mu, Complex<T>(T(2) * z));
  using std::pow;
  T two_nu = pow(T(2), nu);
  Complex<T> g = detail::rgamma<T>(Complex<T>(nu + T(1)));
  return (red * g).re / two_nu;
}

template <class T>
T bessel_impl(const T& nu, const T& z, BesselKind kind) {
  check_bessel_order(nu);
  using std::pow;
  using std::sqrt;
  if (kind == BesselKind::I) {
    if (z == 0.0) return nu == 0.0 ? T(1) : T(0);
    return i_scaled(nu, z) * pow(z, nu);
  }
  if (!(z > 0.0)) throw Error(ErrorKind::InvalidArgument, "K_nu requires z > 0");
  Complex<T> w = detail::whit_w<T>(Complex<T>(T(0)), Complex<T>(nu), T(2) * z, false);
  return sqrt(num::pi<T>() / (T(2) * z)) * w.re;
}

}  // namespace

double bessel_modified(double nu, double z, BesselKind kind) { return bessel_impl(nu, z, kind); }
xfloat bessel_modified(const xfloat& nu, const xfloat& z, BesselKind kind) {
  return bessel_impl(nu, z, kind);
}
double bessel_i_scaled(double nu, double z) { return i_scaled(nu, z); }
xfloat bessel_i_scaled(const xfloat& nu, const xfloat& z) { return i_scaled(nu, z); }

}  // namespace wadd
