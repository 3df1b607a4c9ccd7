#include "detail/kummer.hpp"

#include <cmath>
#include <string>

#include "detail/gamma.hpp"
#include "wadd/error.hpp"

namespace wadd::detail {

namespace {

template <class W>
using C = Complex<W>;

template <class W>
C<W> one() {
  return C<W>(W(1));
}

template <class W>
bool is_zero(const C<W>& z) {
  return z.re == W(0) && z.im == W(0);
}

[[noreturn]] void no_convergence(const char* what, long max_terms) {
  throw Error(ErrorKind::NoConvergence,
              std::string(what) + " did not converge within " + std::to_string(max_terms) + " terms");
}

// Direct power series of 1F1(a; b; z). Stops after three consecutive terms
// below tolerance once the rigorous ratio bound also caps the tail.
template <class W>
Attempt<W> m_series(const C<W>& a, const C<W>& b, const C<W>& z, const KummerConfig& cfg) {
  if (is_zero(z)) return {one<W>(), 1.0, 1};
  const W tol = num::epsilon<W>();
  const W zmag = num::abs(z);
  const W amb = num::abs(a - b);
  C<W> t = one<W>();
  Accumulator<W> acc;
  acc.add(t);
  W sum_abs(1);
  int small = 0;
  for (long k = 0; k < cfg.max_terms; ++k) {
    t = t * (a + W(k)) * z / ((b + W(k)) * W(k + 1));
    acc.add(t);
    W m = mag1(t);
    sum_abs += m;
    if (m == W(0)) return {acc.value(), ratio_to_double(sum_abs, mag1(acc.value())), k + 2};
    if (m <= tol * mag1(acc.value())) {
      ++small;
    } else {
      small = 0;
    }
    if (small >= 3) {
      const long kk = k + 1;
      const W den = b.re + W(kk);
      if (den > W(0)) {
        W rho = zmag * (W(1) + amb / den) / W(kk + 1);
        if (rho < W(1) && m * rho / (W(1) - rho) <= tol * mag1(acc.value())) {
          C<W> v = acc.value();
          return {v, ratio_to_double(sum_abs, mag1(v)), kk + 1};
        }
      }
    }
  }
  no_convergence("1F1 series", cfg.max_terms);
}

template <class W>
Attempt<W> m_kernel(const C<W>& a, const C<W>& b, const C<W>& z, const KummerConfig& cfg) {
  if (num::is_nonpositive_integer(b)) {
    throw Error(ErrorKind::PoleAtNonpositiveB, "1F1 second parameter is a non-positive integer");
  }
  if (z.re < W(0)) {
    // Kummer's transformation keeps the series one-signed for real data.
    Attempt<W> s = m_series(b - a, b, -z, cfg);
    s.value = num::exp(z) * s.value;
    return s;
  }
  return m_series(a, b, z, cfg);
}

// U(-m, b, z) as the terminating sum (-1)^m sum_s C(m,s) (b+s)_{m-s} (-z)^s.
template <class W>
Attempt<W> u_polynomial(long m, const C<W>& b, const W& z) {
  C<W> t = num::powi(C<W>(-z), m);
  Accumulator<W> acc;
  acc.add(t);
  W sum_abs = mag1(t);
  for (long s = m - 1; s >= 0; --s) {
    t = t * (b + W(s)) * W(s + 1) / (W(m - s) * (-z));
    acc.add(t);
    sum_abs += mag1(t);
  }
  C<W> v = acc.value();
  if (m % 2 != 0) v = -v;
  return {v, ratio_to_double(sum_abs, mag1(v)), m + 1};
}

// Asymptotic expansion z^{-a} sum (a)_k (a-b+1)_k / k! (-z)^{-k}; accepted
// only when its smallest term drops below tolerance.
template <class W>
bool u_asymptotic(const C<W>& a, const C<W>& b, const W& z, Attempt<W>& out) {
  const W tol = num::epsilon<W>();
  const C<W> c = a - b + W(1);
  C<W> t = one<W>();
  Accumulator<W> acc;
  acc.add(t);
  W sum_abs(1);
  W prev = mag1(t);
  for (long k = 0; k < 2000; ++k) {
    t = t * (a + W(k)) * (c + W(k)) / (W(k + 1) * (-z));
    W m = mag1(t);
    if (m > prev && k > 0) return false;
    acc.add(t);
    sum_abs += m;
    if (m <= tol * mag1(acc.value())) {
      C<W> pz = num::pow(z, -a);
      C<W> v = acc.value();
      out = {pz * v, ratio_to_double(sum_abs, mag1(v)), k + 2};
      return true;
    }
    prev = m;
  }
  return false;
}

// Logarithmic case b = n + 1.
template <class W>
Attempt<W> u_log_case(const C<W>& a, long n, const W& z, const KummerConfig& cfg) {
  using std::log;
  const W tol = num::epsilon<W>();

  // Finite part (1/Gamma(a)) sum_{k=1}^n (k-1)! (1-a+k)_{n-k} / (n-k)! z^{-k}.
  C<W> finite(W(0));
  W finite_abs(0);
  const C<W> rga = rgamma_k(a);
  if (n > 0) {
    W tn = W(1) / z;
    for (long j = 1; j < n; ++j) tn = tn * W(j) / z;
    C<W> t(tn);
    Accumulator<W> acc;
    acc.add(t);
    finite_abs = mag1(t);
    for (long k = n - 1; k >= 1; --k) {
      t = t * (W(1 + k) - a) * z / W(k * (n - k));
      acc.add(t);
      finite_abs += mag1(t);
    }
    finite = acc.value();
  }

  // Log series, absent when a - n is a non-positive integer.
  C<W> series(W(0));
  W series_abs(0);
  C<W> pref = rgamma_k(a - W(n));
  long n_terms = n;
  if (!is_zero(pref)) {
    W nfact(1);
    for (long j = 2; j <= n; ++j) nfact *= W(j);
    pref = pref / nfact;
    if ((n + 1) % 2 != 0) pref = -pref;

    const W lz = log(z);
    C<W> psi_a = digamma_k(a);
    W psi_1 = -num::euler_gamma<W>();
    W psi_n1 = psi_1;
    for (long j = 1; j <= n; ++j) psi_n1 += W(1) / W(j);

    C<W> h = one<W>();  // (a)_k z^k / ((n+1)_k k!)
    Accumulator<W> acc;
    const W zmag = z;
    const W amb = num::abs(a - W(n + 1));
    int small = 0;
    bool done = false;
    for (long k = 0; k < cfg.max_terms; ++k) {
      C<W> bracket = psi_a + (lz - psi_1 - psi_n1);
      C<W> term = h * bracket;
      acc.add(term);
      W m = mag1(term);
      series_abs += m;
      if (is_zero(h)) {
        done = true;
        n_terms += k + 1;
        break;
      }
      if (k > 0 && m <= tol * mag1(acc.value())) {
        ++small;
      } else {
        small = 0;
      }
      if (small >= 3) {
        W rho = zmag * (W(1) + amb / W(n + 1 + k)) / W(k + 1);
        if (rho < W(0.5) && W(2) * m * rho / (W(1) - rho) <= tol * mag1(acc.value())) {
          done = true;
          n_terms += k + 1;
          break;
        }
      }
      // advance to k + 1
      psi_a += one<W>() / (a + W(k));
      psi_1 += W(1) / W(k + 1);
      psi_n1 += W(1) / W(n + 1 + k);
      h = h * (a + W(k)) * z / W((n + 1 + k) * (k + 1));
    }
    if (!done) no_convergence("U logarithmic-case series", cfg.max_terms);
    series = acc.value();
  }

  C<W> first = pref * series;
  C<W> second = rga * finite;
  C<W> v = first + second;
  W sum_abs = mag1(pref) * series_abs + mag1(rga) * finite_abs;
  return {v, ratio_to_double(sum_abs, mag1(v)), n_terms};
}

template <class W>
Attempt<W> u_kernel(const C<W>& a, const C<W>& b, const W& z, const KummerConfig& cfg) {
  if (!(z > W(0))) throw Error(ErrorKind::InvalidArgument, "U requires z > 0");
  if (num::is_nonpositive_integer(a)) {
    return u_polynomial(-static_cast<long>(num::to_double(a.re)), b, z);
  }
  if (b.re < W(1)) {
    // U(a, b, z) = z^{1-b} U(a-b+1, 2-b, z)
    Attempt<W> r = u_kernel(a - b + W(1), W(2) - b, z, cfg);
    r.value = num::pow(z, W(1) - b) * r.value;
    return r;
  }
  if (z > W(5)) {
    Attempt<W> r;
    if (u_asymptotic(a, b, z, r)) return r;
  }
  if (num::is_integer(b)) {
    if (z < W(cfg.small_z_cutoff)) {
      throw Error(ErrorKind::UnsupportedRegion,
                  "U with integer b below the small-z cutoff " + std::to_string(cfg.small_z_cutoff));
    }
    return u_log_case(a, static_cast<long>(num::to_double(b.re)) - 1, z, cfg);
  }
  // Non-integer b: connection formula in terms of 1F1.
  C<W> zc(z);
  Attempt<W> m1 = m_kernel(a, b, zc, cfg);
  Attempt<W> m2 = m_kernel(a - b + W(1), W(2) - b, zc, cfg);
  C<W> t1 = gamma_k(one<W>() - b) * rgamma_k(a - b + W(1)) * m1.value;
  C<W> t2 = gamma_k(b - W(1)) * rgamma_k(a) * num::pow(z, W(1) - b) * m2.value;
  C<W> v = t1 + t2;
  W sum_abs = mag1(t1) * W(m1.cond) + mag1(t2) * W(m2.cond);
  return {v, ratio_to_double(sum_abs, mag1(v)), m1.terms + m2.terms};
}

template <class W>
Attempt<W> combine(const C<W>& c1, const Attempt<W>& x1, const C<W>& c2, const Attempt<W>& x2) {
  C<W> t1 = c1 * x1.value;
  C<W> t2 = c2 * x2.value;
  C<W> v = t1 + t2;
  W sum_abs = mag1(t1) * W(x1.cond) + mag1(t2) * W(x2.cond);
  return {v, ratio_to_double(sum_abs, mag1(v)), x1.terms + x2.terms};
}

template <class W>
Attempt<W> wm_kernel(const C<W>& kappa, const C<W>& mu, const C<W>& z, bool deriv,
                     bool reduced, const KummerConfig& cfg) {
  const W half(0.5);
  C<W> a = mu - kappa + half;
  C<W> b = W(2) * mu + W(1);
  Attempt<W> f = m_kernel(a, b, z, cfg);
  C<W> e = num::exp(-(z * half));
  if (reduced) {
    f.value = e * f.value;
    return f;
  }
  if (!deriv) {
    f.value = e * num::pow(z, mu + half) * f.value;
    return f;
  }
  // dM/dz = e^{-z/2} z^{mu-1/2} [ (mu+1/2) F + z ( -F/2 + (a/b) F(a+1, b+1) ) ]
  Attempt<W> f1 = m_kernel(a + W(1), b + W(1), z, cfg);
  C<W> pre = e * num::pow(z, mu - half);
  Attempt<W> r = combine((mu + half) - z * half, f, z * a / b, f1);
  r.value = pre * r.value;
  return r;
}

template <class W>
Attempt<W> ww_kernel(const C<W>& kappa, const C<W>& mu, const W& r, bool deriv,
                     const KummerConfig& cfg) {
  using std::exp;
  if (!(r > W(0))) throw Error(ErrorKind::InvalidArgument, "W requires r > 0");
  const W half(0.5);
  C<W> a = mu - kappa + half;
  C<W> b = W(2) * mu + W(1);
  Attempt<W> u = u_kernel(a, b, r, cfg);
  C<W> pre = exp(-r * half) * num::pow(r, mu + half);
  if (!deriv) {
    u.value = pre * u.value;
    return u;
  }
  // dW/dr = e^{-r/2} r^{mu+1/2} [ (-1/2 + (mu+1/2)/r) U(a,b) - a U(a+1,b+1) ]
  C<W> c1 = (mu + half) / r - half;
  Attempt<W> res;
  if (is_zero(a)) {
    res = u;
    res.value = c1 * u.value;
    res.cond = 1.0;
  } else {
    Attempt<W> u1 = u_kernel(a + W(1), b + W(1), r, cfg);
    res = combine(c1, u, -a, u1);
  }
  res.value = pre * res.value;
  return res;
}

}  // namespace

template <class T>
Complex<T> hyp1f1(const Complex<T>& a, const Complex<T>& b, const Complex<T>& z,
                  const KummerConfig& cfg, Diag* diag) {
  return escalate<T>(
      [&]<class W>() { return m_kernel<W>(cvt<W>(a), cvt<W>(b), cvt<W>(z), cfg); }, diag);
}

template <class T>
Complex<T> hypu(const Complex<T>& a, const Complex<T>& b, const T& z, const KummerConfig& cfg,
                Diag* diag) {
  return escalate<T>(
      [&]<class W>() { return u_kernel<W>(cvt<W>(a), cvt<W>(b), cvt<W>(z), cfg); }, diag);
}

template <class T>
Complex<T> whit_m(const Complex<T>& kappa, const Complex<T>& mu, const Complex<T>& z,
                  bool deriv, const KummerConfig& cfg, Diag* diag) {
  return escalate<T>(
      [&]<class W>() {
        return wm_kernel<W>(cvt<W>(kappa), cvt<W>(mu), cvt<W>(z), deriv, false, cfg);
      },
      diag);
}

template <class T>
Complex<T> whit_m_reduced(const Complex<T>& kappa, const Complex<T>& mu, const Complex<T>& z,
                          const KummerConfig& cfg, Diag* diag) {
  return escalate<T>(
      [&]<class W>() {
        return wm_kernel<W>(cvt<W>(kappa), cvt<W>(mu), cvt<W>(z), false, true, cfg);
      },
      diag);
}

template <class T>
Complex<T> whit_w(const Complex<T>& kappa, const Complex<T>& mu, const T& r, bool deriv,
                  const KummerConfig& cfg, Diag* diag) {
  return escalate<T>(
      [&]<class W>() {
        return ww_kernel<W>(cvt<W>(kappa), cvt<W>(mu), cvt<W>(r), deriv, cfg);
      },
      diag);
}

namespace {

// Gamma-family front-ends: double runs at 30 digits so that exp(log Gamma)
// keeps full double accuracy for large arguments.
template <class T, class K>
Complex<T> gamma_front(const Complex<T>& z, K kern) {
  if constexpr (std::is_same_v<T, double>) {
    PrecisionScope scope(32);
    Complex<xfloat> v = kern(cvt<xfloat>(z));
    return cvt<double>(v);
  } else {
    const int d = working_digits();
    Complex<xfloat> v;
    {
      PrecisionScope scope(d + 8);
      v = kern(cvt<xfloat>(z));
    }
    return v;
  }
}

}  // namespace

template <class T>
Complex<T> gamma(const Complex<T>& z) {
  return gamma_front<T>(z, [](const Complex<xfloat>& w) { return gamma_k(w); });
}

template <class T>
Complex<T> rgamma(const Complex<T>& z) {
  return gamma_front<T>(z, [](const Complex<xfloat>& w) { return rgamma_k(w); });
}

template <class T>
Complex<T> log_gamma(const Complex<T>& z) {
  return gamma_front<T>(z, [](const Complex<xfloat>& w) { return log_gamma_k(w); });
}

template <class T>
Complex<T> digamma(const Complex<T>& z) {
  return gamma_front<T>(z, [](const Complex<xfloat>& w) { return digamma_k(w); });
}

#define WADD_INSTANTIATE(T)                                                                  \
  template Complex<T> hyp1f1<T>(const Complex<T>&, const Complex<T>&, const Complex<T>&,   \
                                const KummerConfig&, Diag*);                                \
  template Complex<T> hypu<T>(const Complex<T>&, const Complex<T>&, const T&,              \
                              const KummerConfig&, Diag*);                                  \
  template Complex<T> whit_m<T>(const Complex<T>&, const Complex<T>&, const Complex<T>&,   \
                                bool, const KummerConfig&, Diag*);                          \
  template Complex<T> whit_m_reduced<T>(const Complex<T>&, const Complex<T>&,              \
                                        const Complex<T>&, const KummerConfig&, Diag*);     \
  template Complex<T> whit_w<T>(const Complex<T>&, const Complex<T>&, const T&, bool,      \
                                const KummerConfig&, Diag*);                                \
  template Complex<T> gamma<T>(const Complex<T>&);                                         \
  template Complex<T> rgamma<T>(const Complex<T>&);                                        \
  template Complex<T> log_gamma<T>(const Complex<T>&);                                     \
  template Complex<T> digamma<T>(const Complex<T>&);

WADD_INSTANTIATE(double)
WADD_INSTANTIATE(xfloat)

#undef WADD_INSTANTIATE

}  // namespace wadd::detail
