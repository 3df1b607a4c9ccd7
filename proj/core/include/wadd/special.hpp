#pragma once

#include <complex>

#include "wadd/complex.hpp"
#include "wadd/xfloat.hpp"

namespace wadd {

using ComplexScalar = std::complex<double>;

/// The pair (kappa, mu) indexing M_{kappa,mu} and W_{kappa,mu}.
struct WhittakerOrder {
  ComplexScalar kappa;
  ComplexScalar mu;
};

struct XWhittakerOrder {
  XComplex kappa;
  XComplex mu;
};

/// Value plus the diagnostics of the series that produced it.
struct Evaluation {
  ComplexScalar value;
  long n_terms = 0;
  double condition_number = 1.0;  // sum |t_k| / |sum t_k| of the dominant series
  int digits = 16;                // working digits of the accepted evaluation
};

struct KummerOptions {
  long max_terms = 10000;
  /// Below this argument U with integer b reports UnsupportedRegion.
  double small_z_cutoff = 1e-8;
};

// Gamma family over complex arguments.
ComplexScalar gamma(ComplexScalar z);
/// 1/Gamma(z), zero at the poles.
ComplexScalar rgamma(ComplexScalar z);
/// A logarithm of Gamma(z); the imaginary part is a phase, not necessarily
/// the principal value.
ComplexScalar log_gamma(ComplexScalar z);
ComplexScalar digamma(ComplexScalar z);
XComplex gamma(const XComplex& z);
XComplex rgamma(const XComplex& z);
XComplex log_gamma(const XComplex& z);
XComplex digamma(const XComplex& z);

// Pochhammer symbols and Gamma ratios, always as products.

/// (a)_n = a (a+1) ... (a+n-1); equals Gamma(a+n)/Gamma(a).
ComplexScalar rising(ComplexScalar a, long n);
XComplex rising(const XComplex& a, long n);
/// log((a)_n) as log|.| + i*phase; throws PoleHit if a factor is zero.
ComplexScalar log_rising(ComplexScalar a, long n);
/// (a)_n / (b)_n; throws PoleHit if a denominator factor is zero.
ComplexScalar rising_ratio(ComplexScalar a, ComplexScalar b, long n);
/// Binomial coefficient C(n, k) for 0 <= k <= n.
double binomial(long n, long k);

enum class PochhammerKind { Rising, LogRising, GammaRatio, RisingRatio, Binomial };

struct PochhammerParams {
  ComplexScalar a;
  ComplexScalar b;  // RisingRatio only
  long n = 0;
  long k = 0;  // Binomial only
};

/// Dispatches to the product formulas above. GammaRatio returns
/// Gamma(a+n)/Gamma(a) and switches to the log-scaled product for n > 30.
ComplexScalar pochhammer_ratio(PochhammerKind kind, const PochhammerParams& p);

// Kummer functions.

/// 1F1(a; b; z).
ComplexScalar kummer_m(ComplexScalar a, ComplexScalar b, ComplexScalar z,
                       const KummerOptions& opts = {});
Evaluation kummer_m_eval(ComplexScalar a, ComplexScalar b, ComplexScalar z,
                         const KummerOptions& opts = {});
XComplex kummer_m(const XComplex& a, const XComplex& b, const XComplex& z,
                  const KummerOptions& opts = {});

/// U(a, b, z) for z > 0.
ComplexScalar kummer_u(ComplexScalar a, ComplexScalar b, double z, const KummerOptions& opts = {});
Evaluation kummer_u_eval(ComplexScalar a, ComplexScalar b, double z,
                         const KummerOptions& opts = {});
XComplex kummer_u(const XComplex& a, const XComplex& b, const xfloat& z,
                  const KummerOptions& opts = {});

// Whittaker functions.

/// M_{kappa,mu}(r) or dM/dr for r >= 0.
ComplexScalar whittaker_m(const WhittakerOrder& order, double r, bool deriv = false,
                          const KummerOptions& opts = {});
Evaluation whittaker_m_eval(const WhittakerOrder& order, double r, bool deriv = false,
                            const KummerOptions& opts = {});
/// M_{kappa,mu}(z) at complex z, principal branch of z^{mu+1/2}.
ComplexScalar whittaker_m(const WhittakerOrder& order, ComplexScalar z,
                          const KummerOptions& opts = {});
/// z^{-mu-1/2} M_{kappa,mu}(z), which is entire in z.
ComplexScalar whittaker_m_reduced(const WhittakerOrder& order, ComplexScalar z,
                                  const KummerOptions& opts = {});

/// W_{kappa,mu}(r) or dW/dr for r > 0.
ComplexScalar whittaker_w(const WhittakerOrder& order, double r, bool deriv = false,
                          const KummerOptions& opts = {});
Evaluation whittaker_w_eval(const WhittakerOrder& order, double r, bool deriv = false,
                            const KummerOptions& opts = {});

XComplex whittaker_m(const XWhittakerOrder& order, const xfloat& r, bool deriv = false,
                     const KummerOptions& opts = {});
XComplex whittaker_m_reduced(const XWhittakerOrder& order, const XComplex& z,
                             const KummerOptions& opts = {});
XComplex whittaker_w(const XWhittakerOrder& order, const xfloat& r, bool deriv = false,
                     const KummerOptions& opts = {});

// Modified Bessel functions of order nu with 2*nu a non-negative integer,
// through the Whittaker reduction.

enum class BesselKind { I, K };

double bessel_modified(double nu, double z, BesselKind kind);
xfloat bessel_modified(const xfloat& nu, const xfloat& z, BesselKind kind);
/// I_nu(z) / z^nu, finite at z = 0.
double bessel_i_scaled(double nu, double z);
xfloat bessel_i_scaled(const xfloat& nu, const xfloat& z);

}  // namespace wadd
