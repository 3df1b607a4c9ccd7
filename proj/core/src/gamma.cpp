#include "detail/gamma.hpp"

#include <gmpxx.h>

#include <cmath>
#include <deque>
#include <mutex>

#include "wadd/error.hpp"

namespace wadd::detail {

namespace {

std::mutex bern_mutex;
std::deque<mpq_class> bern_even;  // B_0, B_2, B_4, ...
std::deque<double> bern_even_d;

// Grows the cache of even Bernoulli numbers up to B_{2k}. The deque keeps
// references stable while other threads read earlier entries.
void ensure_bernoulli(int k) {
  std::lock_guard<std::mutex> lock(bern_mutex);
  if (static_cast<int>(bern_even.size()) > k) return;
  // Full table B_0..B_{2k} via sum_{j<m} C(m+1, j) B_j = -(m+1) B_m.
  const int top = 2 * k;
  std::vector<mpq_class> b(top + 1);
  b[0] = 1;
  for (int m = 1; m <= top; ++m) {
    if (m > 1 && (m % 2) == 1) {
      b[m] = 0;
      continue;
    }
    mpz_class binom = 1;  // C(m+1, 0)
    mpq_class acc = 0;
    for (int j = 0; j < m; ++j) {
      acc += binom * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / (m + 1);
  }
  for (int i = static_cast<int>(bern_even.size()); i <= k; ++i) {
    bern_even.push_back(b[2 * i]);
    bern_even_d.push_back(b[2 * i].get_d());
  }
}

template <class T>
T stirling_threshold() {
  if constexpr (std::is_same_v<T, double>) {
    return 15.0;
  } else {
    return T(0.4 * working_digits() + 10.0);
  }
}

// Number of unit shifts N so that |z + N| >= x0 and Re(z + N) >= x0/2.
template <class T>
long shift_count(const Complex<T>& z, const T& x0) {
  using std::ceil;
  long n = 0;
  T half = x0 / T(2);
  if (z.re < half) n = static_cast<long>(num::to_double(ceil(half - z.re)));
  while (true) {
    Complex<T> w = z + T(n);
    if (num::abs(w) >= x0) break;
    ++n;
  }
  return n;
}

template <class T>
bool is_pole(const Complex<T>& z) {
  return num::is_nonpositive_integer(z);
}

}  // namespace

template <class T>
T bernoulli_2k(int k) {
  ensure_bernoulli(k);
  if constexpr (std::is_same_v<T, double>) {
    std::lock_guard<std::mutex> lock(bern_mutex);
    return bern_even_d[k];
  } else {
    xfloat r(0);
    std::lock_guard<std::mutex> lock(bern_mutex);
    mpfr_set_q(r.get(), bern_even[k].get_mpq_t(), MPFR_RNDN);
    return r;
  }
}

template <class T>
Complex<T> sin_pi(const Complex<T>& z) {
  using std::round;
  T n = round(z.re);
  Complex<T> f(z.re - n, z.im);
  Complex<T> s = num::sin(f * num::pi<T>());
  long ni = static_cast<long>(num::to_double(n));
  if (ni % 2 != 0) s = -s;
  return s;
}

template <class T>
Complex<T> log_gamma_k(const Complex<T>& z) {
  if (is_pole(z)) throw Error(ErrorKind::PoleHit, "gamma at a non-positive integer");
  const T half(0.5);
  if (z.re < half) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    Complex<T> one_minus = Complex<T>(T(1)) - z;
    Complex<T> lg = log_gamma_k(one_minus);
    return num::log(Complex<T>(num::pi<T>())) - num::log(sin_pi(z)) - lg;
  }
  const T x0 = stirling_threshold<T>();
  const long n = shift_count(z, x0);
  Complex<T> prod(T(1));
  for (long k = 0; k < n; ++k) prod = prod * (z + T(k));
  Complex<T> w = z + T(n);
  Complex<T> lw = num::log(w);
  Complex<T> s = (w - half) * lw - w + T(0.5) * num::log(Complex<T>(T(2) * num::pi<T>()));
  Complex<T> w2 = w * w;
  Complex<T> wp = w;  // w^{2k-1}
  const T eps = num::epsilon<T>();
  T prev_mag(0);
  for (int k = 1; k < 4000; ++k) {
    T c = bernoulli_2k<T>(k) / T(2 * k * (2 * k - 1));
    Complex<T> term = c / wp;
    T mag = num::abs(term);
    s += term;
    if (mag <= eps * num::abs(s)) break;
    if (k > 2 && mag > prev_mag) break;  // asymptotic series turning
    prev_mag = mag;
    wp = wp * w2;
  }
  if (n > 0) s -= num::log(prod);
  return s;
}

template <class T>
Complex<T> gamma_k(const Complex<T>& z) {
  return num::exp(log_gamma_k(z));
}

template <class T>
Complex<T> rgamma_k(const Complex<T>& z) {
  if (is_pole(z)) return Complex<T>(T(0));
  return num::exp(-log_gamma_k(z));
}

template <class T>
Complex<T> digamma_k(const Complex<T>& z) {
  if (is_pole(z)) throw Error(ErrorKind::PoleHit, "digamma at a non-positive integer");
  const T half(0.5);
  if (z.re < half) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    Complex<T> one_minus = Complex<T>(T(1)) - z;
    Complex<T> s = sin_pi(z);
    using std::round;
    T n = round(z.re);
    Complex<T> f(z.re - n, z.im);
    Complex<T> c = num::cos(f * num::pi<T>());
    if (static_cast<long>(num::to_double(n)) % 2 != 0) c = -c;
    return digamma_k(one_minus) - num::pi<T>() * c / s;
  }
  const T x0 = stirling_threshold<T>();
  const long n = shift_count(z, x0);
  Complex<T> corr(T(0));
  for (long k = 0; k < n; ++k) corr += Complex<T>(T(1)) / (z + T(k));
  Complex<T> w = z + T(n);
  Complex<T> s = num::log(w) - Complex<T>(T(1)) / (T(2) * w);
  Complex<T> w2 = w * w;
  Complex<T> wp = w2;
  const T eps = num::epsilon<T>();
  T prev_mag(0);
  for (int k = 1; k < 4000; ++k) {
    Complex<T> term = bernoulli_2k<T>(k) / (T(2 * k) * wp);
    T mag = num::abs(term);
    s -= term;
    if (mag <= eps * num::abs(s)) break;
    if (k > 2 && mag > prev_mag) break;
    prev_mag = mag;
    wp = wp * w2;
  }
  return s - corr;
}

#define WADD_INSTANTIATE(T)                                  \
  template T bernoulli_2k<T>(int);                           \
  template Complex<T> sin_pi<T>(const Complex<T>&);          \
  template Complex<T> log_gamma_k<T>(const Complex<T>&);     \
  template Complex<T> gamma_k<T>(const Complex<T>&);         \
  template Complex<T> rgamma_k<T>(const Complex<T>&);        \
  template Complex<T> digamma_k<T>(const Complex<T>&);

WADD_INSTANTIATE(double)
WADD_INSTANTIATE(xfloat)

#undef WADD_INSTANTIATE

}  // namespace wadd::detail
