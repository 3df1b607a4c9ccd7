#pragma once

#include "wadd/complex.hpp"

namespace wadd::detail {

// Kernels evaluated entirely in T, without precision escalation.

/// A logarithm of Gamma(z) (not necessarily the principal branch).
template <class T>
Complex<T> log_gamma_k(const Complex<T>& z);

template <class T>
Complex<T> gamma_k(const Complex<T>& z);

/// 1/Gamma(z); exactly zero at the poles.
template <class T>
Complex<T> rgamma_k(const Complex<T>& z);

template <class T>
Complex<T> digamma_k(const Complex<T>& z);

/// sin(pi z) with the argument reduced modulo 2 first.
template <class T>
Complex<T> sin_pi(const Complex<T>& z);

/// B_{2k} converted to T.
template <class T>
T bernoulli_2k(int k);

}  // namespace wadd::detail
