#pragma once

#include "detail/escalate.hpp"

namespace wadd::detail {

struct KummerConfig {
  long max_terms = 10000;
  double small_z_cutoff = 1e-8;
};

// Escalating front-ends, instantiated for T = double and T = xfloat. The
// result carries at least the accuracy of T (about 1e-13 relative for double,
// working precision for xfloat).

template <class T>
Complex<T> hyp1f1(const Complex<T>& a, const Complex<T>& b, const Complex<T>& z,
                  const KummerConfig& cfg = {}, Diag* diag = nullptr);

template <class T>
Complex<T> hypu(const Complex<T>& a, const Complex<T>& b, const T& z,
                const KummerConfig& cfg = {}, Diag* diag = nullptr);

/// M_{kappa,mu}(z) or its z-derivative; principal branch of z^{mu+1/2}.
template <class T>
Complex<T> whit_m(const Complex<T>& kappa, const Complex<T>& mu, const Complex<T>& z,
                  bool deriv, const KummerConfig& cfg = {}, Diag* diag = nullptr);

/// z^{-mu-1/2} M_{kappa,mu}(z) = e^{-z/2} 1F1(mu-kappa+1/2; 2mu+1; z), entire in z.
template <class T>
Complex<T> whit_m_reduced(const Complex<T>& kappa, const Complex<T>& mu,
                          const Complex<T>& z, const KummerConfig& cfg = {},
                          Diag* diag = nullptr);

template <class T>
Complex<T> whit_w(const Complex<T>& kappa, const Complex<T>& mu, const T& r, bool deriv,
                  const KummerConfig& cfg = {}, Diag* diag = nullptr);

template <class T>
Complex<T> gamma(const Complex<T>& z);
template <class T>
Complex<T> rgamma(const Complex<T>& z);
template <class T>
Complex<T> log_gamma(const Complex<T>& z);
template <class T>
Complex<T> digamma(const Complex<T>& z);

}  // namespace wadd::detail
