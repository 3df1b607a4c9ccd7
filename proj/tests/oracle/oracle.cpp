#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

namespace num = wadd::num;

X cx(double re, double im) { return {xfloat(re), xfloat(im)}; }
X cx(const xfloat& re) { return {re, xfloat(0)}; }

namespace {

xfloat absx(const X& z) { return num::abs(z); }

xfloat from_z(const mpz_class& z) {
  xfloat v(0);
  mpfr_set_z(v.get(), z.get_mpz_t(), MPFR_RNDN);
  return v;
}

xfloat from_q(const mpq_class& q) {
  xfloat v(0);
  mpfr_set_q(v.get(), q.get_mpq_t(), MPFR_RNDN);
  return v;
}

mpz_class binom(long n, long k) {
  mpz_class b;
  if (k < 0 || k > n) return 0;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

mpz_class fact(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

X powx(const X& z, long n) { return num::powi(z, n); }

struct Geometry {
  xfloat R, x, y, c;
};

Geometry geometry(double r, double r0, double gamma) {
  const xfloat xr(r), xr0(r0), g(gamma);
  const xfloat s = sin(g / 2);
  Geometry geo;
  geo.R = sqrt((xr - xr0) * (xr - xr0) + 4 * xr * xr0 * s * s);
  geo.x = xr + xr0 + geo.R;
  geo.y = xr + xr0 - geo.R;
  geo.c = cos(g);
  return geo;
}

X half() { return cx(0.5); }

}  // namespace

X sum_until_small(const std::function<X(long)>& term, long max_terms) {
  const xfloat eps = xfloat::epsilon();
  X s = cx(0.0);
  int small = 0;
  for (long k = 0; k < max_terms; ++k) {
    const X t = term(k);
    s += t;
    if (absx(t) <= eps * absx(s)) {
      if (++small >= 10) return s;
    } else {
      small = 0;
    }
  }
  throw std::runtime_error("oracle series did not converge");
}

X integrate_half_line(const std::function<X(const xfloat&)>& f) {
  const xfloat eps = xfloat::epsilon();
  const xfloat tol = eps * xfloat(1 << 20);
  const xfloat hp = xfloat::pi() / 2;
  auto node = [&](const xfloat& u) -> X {
    const xfloat t = exp(hp * sinh(u));
    if (t == 0.0 || isinf(t)) return cx(0.0);
    return f(t) * (hp * cosh(u) * t);
  };
  struct Level {
    X sum;
    xfloat l1;
  };
  // Node values at u = start + j * stride for j in Z, truncated once they are
  // negligible against `scale`.
  auto sweep = [&](const xfloat& start, const xfloat& stride, const xfloat& scale) -> Level {
    const X v0 = node(start);
    Level lv{v0, absx(v0)};
    for (int dir = -1; dir <= 1; dir += 2) {
      int small = 0;
      xfloat prev = absx(v0);
      for (long j = 1;; ++j) {
        const xfloat u = start + stride * (dir * j);
        if (abs(u) > 12) break;
        const X v = node(u);
        const xfloat m = absx(v);
        lv.sum += v;
        lv.l1 += m;
        // only a decaying flank may end the sweep
        const bool falling = m <= prev;
        prev = m;
        if (falling && m <= eps * std::max(scale, lv.l1)) {
          if (++small >= 4) break;
        } else {
          small = 0;
        }
      }
    }
    return lv;
  };
  xfloat h(0.5);
  Level lv = sweep(xfloat(0), h, xfloat(0));
  X total = lv.sum * h;
  xfloat l1 = lv.l1 * h;
  for (int level = 0; level < 14; ++level) {
    const Level fresh = sweep(h / 2, h, l1 / h);
    h = h / 2;
    const X next = total / xfloat(2) + fresh.sum * h;
    l1 = l1 / 2 + fresh.l1 * h;
    if (absx(next - total) <= tol * l1 && level >= 1) return next;
    total = next;
  }
  throw std::runtime_error("oracle quadrature did not converge");
}

X gamma(const X& a) {
  if (a.im == 0.0) return cx(tgamma(a.re));
  X s = a;
  X num_ = cx(1.0);
  X den = cx(1.0);
  while (s.re < 1.0) {
    den = den * s;
    s = s + xfloat(1);
  }
  while (s.re >= 2.0) {
    s = s - xfloat(1);
    num_ = num_ * s;
  }
  // The reduced argument repeats along a ladder a, a+1, ...; keep its value.
  thread_local std::vector<std::pair<X, X>> cache;
  for (const auto& [key, val] : cache) {
    if (key == s && key.re.precision_bits() == s.re.precision_bits()) return val * num_ / den;
  }
  const X sm1 = s - xfloat(1);
  const X g = integrate_half_line([&](const xfloat& t) { return num::pow(t, sm1) * exp(-t); });
  if (cache.size() > 64) cache.clear();
  cache.emplace_back(s, g);
  return g * num_ / den;
}

X rising(const X& a, long n) {
  X p = cx(1.0);
  for (long j = 0; j < n; ++j) p = p * (a + xfloat(j));
  return p;
}

X hyp1f1(const X& a, const X& b, const X& z) {
  X t = cx(1.0);
  return sum_until_small([&](long k) {
    if (k > 0) {
      const xfloat km1(k - 1);
      t = t * (a + km1) * z / ((b + km1) * xfloat(k));
    }
    return t;
  });
}

namespace {

// Laplace integral for U and -U'; valid for Re a > 0.
X u_integral(const X& a, const X& b, const xfloat& z, bool deriv) {
  const X p1 = deriv ? a : a - xfloat(1);
  const X p2 = b - a - xfloat(1);
  const X i = integrate_half_line([&](const xfloat& t) {
    return num::pow(t, p1) * num::pow(t + 1, p2) * exp(-z * t);
  });
  const X v = i / gamma(a);
  return deriv ? -v : v;
}

struct UPair {
  X u, du;
};

UPair hypu_both(const X& a, const X& b, const xfloat& z) {
  if (a.re >= 1.0) return {u_integral(a, b, z, false), u_integral(a, b, z, true)};
  const long m = static_cast<long>(std::ceil(1.0 - a.re.to_double()));
  X c = a + xfloat(m);
  UPair p1{u_integral(c, b, z, false), u_integral(c, b, z, true)};
  const X c1 = c + xfloat(1);
  UPair p2{u_integral(c1, b, z, false), u_integral(c1, b, z, true)};
  // U(c) = -(b - 2c - 2 - z) U(c+1) - (c+1)(c+2-b) U(c+2)
  for (long j = 0; j < m; ++j) {
    c = c - xfloat(1);
    const X q = b - c * xfloat(2) - xfloat(2) - cx(z);
    const X s = (c + xfloat(1)) * (c + xfloat(2) - b);
    UPair p0{-q * p1.u - s * p2.u, -q * p1.du + p1.u - s * p2.du};
    p2 = p1;
    p1 = p0;
  }
  return p1;
}

}  // namespace

X hypu(const X& a, const X& b, const xfloat& z) { return hypu_both(a, b, z).u; }
X hypu_deriv(const X& a, const X& b, const xfloat& z) { return hypu_both(a, b, z).du; }

X whit_m(const X& kappa, const X& mu, const xfloat& r) {
  return num::pow(r, mu + xfloat(0.5)) * whit_m_reduced(kappa, mu, cx(r));
}

X whit_m_deriv(const X& kappa, const X& mu, const xfloat& r) {
  // term-by-term derivative of e^{-r/2} sum c_k r^{k+mu+1/2}
  const X a = mu - kappa + xfloat(0.5);
  const X b = mu * xfloat(2) + xfloat(1);
  const X e = mu + xfloat(0.5);
  X c = cx(1.0);
  const X s = sum_until_small([&](long k) {
    if (k > 0) {
      const xfloat km1(k - 1);
      c = c * (a + km1) * r / ((b + km1) * xfloat(k));
    }
    return c * ((e + xfloat(k)) / r - xfloat(0.5));
  });
  return s * exp(-r / 2) * num::pow(r, e);
}

X whit_m_reduced(const X& kappa, const X& mu, const X& z) {
  const X a = mu - kappa + xfloat(0.5);
  const X b = mu * xfloat(2) + xfloat(1);
  return num::exp(-z * xfloat(0.5)) * hyp1f1(a, b, z);
}

X whit_w(const X& kappa, const X& mu, const xfloat& r) {
  const X a = mu - kappa + xfloat(0.5);
  const X b = mu * xfloat(2) + xfloat(1);
  return num::pow(r, mu + xfloat(0.5)) * exp(-r / 2) * hypu(a, b, r);
}

X whit_w_deriv(const X& kappa, const X& mu, const xfloat& r) {
  const X a = mu - kappa + xfloat(0.5);
  const X b = mu * xfloat(2) + xfloat(1);
  const UPair u = hypu_both(a, b, r);
  const X e = mu + xfloat(0.5);
  return num::pow(r, e) * exp(-r / 2) * ((e / r - xfloat(0.5)) * u.u + u.du);
}

xfloat bessel_i(const xfloat& nu, const xfloat& x) {
  const xfloat h = x / 2;
  const xfloat q = h * h;
  X t = cx(pow(h, nu) / tgamma(nu + 1));
  return sum_until_small([&](long k) {
           if (k > 0) t = t * q / (xfloat(k) * (nu + k));
           return t;
         })
      .re;
}

xfloat bessel_k(const xfloat& nu, const xfloat& x) {
  const xfloat eps = xfloat::epsilon();
  auto f = [&](const xfloat& t) { return exp(-x * cosh(t)) * cosh(nu * t); };
  auto sweep = [&](const xfloat& start, const xfloat& stride, const xfloat& scale) {
    xfloat s(0);
    xfloat prev(0);
    for (long j = 0;; ++j) {
      const xfloat v = f(start + stride * j);
      s += v;
      if (j > 0 && v <= prev && v <= eps * (scale + s)) break;
      prev = v;
    }
    return s;
  };
  xfloat h(0.5);
  xfloat total = (sweep(xfloat(0), h, xfloat(0)) - f(xfloat(0)) / 2) * h;
  for (int level = 0; level < 16; ++level) {
    const xfloat fresh = sweep(h / 2, h, total);
    h = h / 2;
    const xfloat next = total / 2 + fresh * h;
    if (abs(next - total) <= eps * 1000 * next && level >= 2) return next;
    total = next;
  }
  throw std::runtime_error("oracle K quadrature did not converge");
}

X legendre(int l, const X& x) {
  X s = cx(0.0);
  for (int k = 0; 2 * k <= l; ++k) {
    xfloat c = from_z(binom(l, k) * binom(2 * l - 2 * k, l));
    if (k % 2) c = -c;
    s += powx(x, l - 2 * k) * c;
  }
  return s / pow(xfloat(2), static_cast<long>(l));
}

X gegenbauer(int n, const xfloat& nu, const X& x) {
  X s = cx(0.0);
  const X two_x = x * xfloat(2);
  for (int k = 0; 2 * k <= n; ++k) {
    X c = rising(cx(nu), n - k) / (from_z(fact(k)) * from_z(fact(n - 2 * k)));
    if (k % 2) c = -c;
    s += c * powx(two_x, n - 2 * k);
  }
  return s;
}

X laguerre(int n, int alpha, const X& x) {
  if (n < 0) return cx(0.0);
  X s = cx(0.0);
  for (int k = 0; k <= n; ++k) {
    X c = cx(from_z(binom(n + alpha, n - k)) / from_z(fact(k)));
    if (k % 2) c = -c;
    s += c * powx(x, k);
  }
  return s;
}

mpq_class laguerre_q(int n, int alpha, const mpq_class& x) {
  mpq_class s = 0;
  if (n < 0) return s;
  mpq_class xp = 1;
  for (int k = 0; k <= n; ++k) {
    mpq_class c(binom(n + alpha, n - k), fact(k));
    c.canonicalize();
    s += (k % 2 ? -c : c) * xp;
    xp *= x;
  }
  return s;
}

mpq_class legendre_q(int l, const mpq_class& x) {
  mpq_class s = 0;
  for (int k = 0; 2 * k <= l; ++k) {
    mpq_class xp = 1;
    for (int j = 0; j < l - 2 * k; ++j) xp *= x;
    mpq_class c(binom(l, k) * binom(2 * l - 2 * k, l));
    s += (k % 2 ? -c : c) * xp;
  }
  mpz_class p2 = 1;
  p2 <<= l;
  s /= p2;
  s.canonicalize();
  return s;
}

Sides whittaker_addition(const X& kappa, double r, double r0, double gamma) {
  const Geometry g = geometry(r, r0, gamma);
  const xfloat xr(r), xr0(r0);
  const X one_minus = cx(1.0) - kappa;
  Sides s;
  s.lhs = sum_until_small([&](long l) {
    const X mu = cx(static_cast<double>(l) + 0.5);
    const X c = rising(one_minus, l) / from_z(fact(2 * l));
    return c * whit_m(kappa, mu, xr0) * whit_w(kappa, mu, xr) * legendre(int(l), cx(g.c)) /
           (xr * xr0);
  });
  const xfloat hy = g.y / 2, hx = g.x / 2;
  const X mu = half();
  s.rhs = (whit_m_deriv(kappa, mu, hy) * whit_w(kappa, mu, hx) -
           whit_m(kappa, mu, hy) * whit_w_deriv(kappa, mu, hx)) /
          g.R;
  return s;
}

Sides kappa_integer_limit(double r, double r0, double gamma) {
  const Geometry g = geometry(r, r0, gamma);
  const xfloat xr(r), xr0(r0);
  const X one = cx(1.0);
  Sides s;
  s.lhs = sum_until_small([&](long k) {
    const long l = k + 1;
    const X mu = cx(static_cast<double>(l) + 0.5);
    const xfloat c = from_z(fact(l - 1)) / from_z(fact(2 * l));
    return whit_m(one, mu, xr0) * whit_w(one, mu, xr) * legendre(int(l), cx(g.c)) *
           (c / (xr * xr0));
  });
  const xfloat hy = g.y / 2, hx = g.x / 2;
  const X mu = half();
  auto f = [&](const xfloat& kap) {
    const X k = cx(kap);
    const X br = (whit_m_deriv(k, mu, hy) * whit_w(k, mu, hx) -
                  whit_m(k, mu, hy) * whit_w_deriv(k, mu, hx)) /
                 g.R;
    return br - whit_m(k, mu, xr0) * whit_w(k, mu, xr) / (xr * xr0);
  };
  const xfloat h = pow(xfloat(10), -static_cast<long>(wadd::working_digits() / 3));
  s.rhs = -(f(1 + h) - f(1 - h)) / (2 * h);
  return s;
}

namespace {

Sides collinear(const X& kappa, double r, double r0, bool pi) {
  const xfloat xr(r), xr0(r0);
  const X one_minus = cx(1.0) - kappa;
  const X g1 = gamma(one_minus);
  const X mu = half();
  Sides s;
  s.lhs = sum_until_small([&](long l) {
    const X m = cx(static_cast<double>(l) + 0.5);
    X c = g1 * rising(one_minus, l) / from_z(fact(2 * l));
    if (pi && l % 2) c = -c;
    return c * whit_m(kappa, m, xr0) * whit_w(kappa, m, xr) / (xr * xr0);
  });
  if (pi) {
    s.rhs = g1 * whit_w(kappa, mu, xr + xr0) / (xr + xr0);
  } else {
    s.rhs = g1 / (xr - xr0) *
            (whit_m_deriv(kappa, mu, xr0) * whit_w(kappa, mu, xr) -
             whit_m(kappa, mu, xr0) * whit_w_deriv(kappa, mu, xr));
  }
  return s;
}

}  // namespace

Sides gamma_zero(const X& kappa, double r, double r0) { return collinear(kappa, r, r0, false); }
Sides gamma_pi(const X& kappa, double r, double r0) { return collinear(kappa, r, r0, true); }

Sides m_exp_sum(const X& kappa, const X& z) {
  const X one_minus = cx(1.0) - kappa;
  Sides s;
  s.lhs = sum_until_small([&](long l) {
    X c = rising(one_minus, l) * powx(z, l) / from_z(fact(2 * l));
    if (l % 2) c = -c;
    return c * whit_m_reduced(kappa, cx(static_cast<double>(l) + 0.5), z);
  });
  s.rhs = num::exp(-z * xfloat(0.5));
  return s;
}

Sides graf_2d(double k, double r, double r0, double phi) {
  const xfloat xk(k), xr(r), xr0(r0), xp(phi);
  Sides s;
  s.lhs = sum_until_small([&](long n) {
    const xfloat nu(n);
    const xfloat w = n == 0 ? xfloat(1) : 2 * cos(nu * xp);
    return cx(w * bessel_i(nu, xk * xr0) * bessel_k(nu, xk * xr));
  });
  const xfloat R = sqrt(xr * xr + xr0 * xr0 - 2 * xr * xr0 * cos(xp));
  s.rhs = cx(bessel_k(xfloat(0), xk * R));
  return s;
}

Sides gegenbauer_addition(double nu, double r, double r0, double gamma) {
  const xfloat xn(nu), xr(r), xr0(r0);
  const xfloat c = cos(xfloat(gamma));
  const xfloat pre = pow(xfloat(2), xn) * tgamma(xn);
  Sides s;
  s.lhs = sum_until_small([&](long n) {
    const xfloat order = xn + n;
    const xfloat v = order * bessel_i(order, xr0) / pow(xr0, xn) * bessel_k(order, xr) /
                     pow(xr, xn);
    return gegenbauer(int(n), xn, cx(c)) * (pre * v);
  });
  const xfloat R = sqrt(xr * xr + xr0 * xr0 - 2 * xr * xr0 * c);
  s.rhs = cx(bessel_k(xn, R) / pow(R, xn));
  return s;
}

Sides w_downward_sum(int n, const X& kappa, const X& mu, double r) {
  const xfloat xr(r);
  const X two_mu = mu * xfloat(2);
  Sides s;
  s.lhs = cx(0.0);
  for (int l = 0; l <= n; ++l) {
    X c = (two_mu + xfloat(2 * l)) * from_z(binom(n, l)) / rising(two_mu + xfloat(l), n + 1);
    if (l % 2) c = -c;
    s.lhs += c * whit_w(kappa, mu + xfloat(l), xr);
  }
  const xfloat hn = xfloat(n) / 2;
  s.rhs = whit_w(kappa - hn, mu + hn, xr) * pow(xr, -hn);
  if (n % 2) s.rhs = -s.rhs;
  return s;
}

Sides pi_addition_general(const X& kappa, const X& mu, double r0, double r) {
  const xfloat xr(r), xr0(r0);
  const X a = mu - kappa + xfloat(0.5);
  const X two_mu = mu * xfloat(2);
  Sides s;
  s.lhs = sum_until_small([&](long l) {
    X c = rising(a, l) / (rising(two_mu + xfloat(l), l) * from_z(fact(l)));
    if (l % 2) c = -c;
    const X order = mu + xfloat(l);
    return c * whit_m(kappa, order, xr0) * whit_w(kappa, order, xr);
  });
  s.lhs = s.lhs * num::pow(xr * xr0, -(mu + xfloat(0.5)));
  const xfloat sum = xr + xr0;
  s.rhs = num::pow(sum, -(mu + xfloat(0.5))) * whit_w(kappa, mu, sum);
  return s;
}

Sides m_gegenbauer_sum(const X& kappa, double mu, const X& z, double gamma) {
  const xfloat xm(mu), g(gamma);
  const X a = cx(xm) - kappa + xfloat(0.5);
  const X c = cx(cos(g));
  Sides s;
  s.lhs = sum_until_small([&](long l) {
    const X coef = rising(a, l) * powx(z, l) / rising(cx(2 * xm), 2 * l);
    return coef * whit_m_reduced(kappa, cx(xm + l), z) * gegenbauer(int(l), xm, c);
  });
  const xfloat ch = cos(g / 2);
  s.rhs = num::exp(-z * xfloat(0.5)) * hyp1f1(a, cx(xm + xfloat(0.5)), z * (ch * ch));
  return s;
}

Sides laguerre_symmetric_pi(int n, const X& u, const X& v) {
  Sides s;
  s.lhs = cx(0.0);
  for (int l = 0; l <= n; ++l) {
    X c = cx(from_z(fact(n - l)) / from_z(fact(n + l + 1)) * (2 * l + 1));
    if (l % 2) c = -c;
    s.lhs += c * powx(u * v, l) * laguerre(n - l, 2 * l + 1, u) * laguerre(n - l, 2 * l + 1, v);
  }
  s.rhs = laguerre(n, 1, u + v);
  return s;
}

mpq_class laguerre_addition_lhs(int n, const mpq_class& r, const mpq_class& r0,
                                const mpq_class& cos_gamma) {
  mpq_class s = 0;
  mpq_class rr = r * r0;
  mpq_class rp = 1;
  for (int l = 0; l < n; ++l) {
    const int deg = n - l - 1;
    mpq_class c(fact(deg) * (2 * l + 1), fact(n + l));
    c.canonicalize();
    s += c * rp * laguerre_q(deg, 2 * l + 1, r) * laguerre_q(deg, 2 * l + 1, r0) *
         legendre_q(l, cos_gamma);
    rp *= rr;
  }
  s.canonicalize();
  return s;
}

X laguerre_addition_rhs(int n, const mpq_class& r, const mpq_class& r0,
                        const mpq_class& cos_gamma) {
  const xfloat xr = from_q(r), xr0 = from_q(r0), c = from_q(cos_gamma);
  const xfloat R = sqrt(xr * xr + xr0 * xr0 - 2 * xr * xr0 * c);
  const X x = cx(xr + xr0 + R), y = cx(xr + xr0 - R);
  const X hx = x * xfloat(0.5), hy = y * xfloat(0.5);
  return (x * laguerre(n - 1, 1, hx) * laguerre(n, 0, hy) -
          y * laguerre(n - 1, 1, hy) * laguerre(n, 0, hx)) /
         (2 * R);
}

ExactSides laguerre_symmetric(int n, const mpq_class& u, const mpq_class& v) {
  ExactSides s;
  s.lhs = 0;
  mpq_class uv = u * v, p = 1;
  for (int l = 0; l <= n; ++l) {
    mpq_class c(fact(n - l) * (2 * l + 1), fact(n + l + 1));
    c.canonicalize();
    s.lhs += c * p * laguerre_q(n - l, 2 * l + 1, u) * laguerre_q(n - l, 2 * l + 1, v);
    p *= uv;
  }
  s.rhs = (u * laguerre_q(n, 1, u) * laguerre_q(n + 1, 0, v) -
           v * laguerre_q(n, 1, v) * laguerre_q(n + 1, 0, u)) /
          (u - v);
  s.lhs.canonicalize();
  s.rhs.canonicalize();
  return s;
}

ExactSides lemma_binomial(int N, const mpq_class& nu) {
  auto rise = [](const mpq_class& a, int n) {
    mpq_class p = 1;
    for (int j = 0; j < n; ++j) p *= a + j;
    return p;
  };
  ExactSides s;
  s.lhs = 0;
  for (int l = 0; l <= N; ++l) {
    s.lhs += mpq_class(binom(N, l)) * (2 * nu + 2 * l) / rise(2 * nu + l, N + 1);
  }
  s.rhs = 1 / rise(nu + mpq_class(1, 2), N);
  s.lhs.canonicalize();
  s.rhs.canonicalize();
  return s;
}

Sides wronskian(double kappa, double x) {
  const X k = cx(kappa), mu = half();
  const xfloat xx(x);
  Sides s;
  s.lhs = whit_m(k, mu, xx) * whit_w_deriv(k, mu, xx) - whit_m_deriv(k, mu, xx) * whit_w(k, mu, xx);
  s.rhs = -(cx(1.0) / gamma(cx(1.0) - k));
  return s;
}

xfloat hostler_green(double g, double k, const double p[3], const double p0[3]) {
  auto cart = [](const double q[3]) {
    const xfloat r(q[0]), t(q[1]), f(q[2]);
    return std::array<xfloat, 3>{r * sin(t) * cos(f), r * sin(t) * sin(f), r * cos(t)};
  };
  const auto a = cart(p), b = cart(p0);
  xfloat d2(0);
  for (int i = 0; i < 3; ++i) d2 += (a[i] - b[i]) * (a[i] - b[i]);
  const xfloat R = sqrt(d2);
  const xfloat xr(p[0]), xr0(p0[0]), xk(k);
  const xfloat x = xr + xr0 + R, y = xr + xr0 - R;
  const X kappa = cx(xfloat(g) / (2 * xk));
  const X mu = half();
  const X br = whit_m_deriv(kappa, mu, xk * y) * whit_w(kappa, mu, xk * x) -
               whit_m(kappa, mu, xk * y) * whit_w_deriv(kappa, mu, xk * x);
  return (gamma(cx(1.0) - kappa) * br).re / (4 * xfloat::pi() * R);
}

xfloat eigenfunction_norm(int n, int l, double g) {
  const xfloat xg(g), xn(n);
  const xfloat a = xg / xn;
  const xfloat norm2 =
      a * a * a * from_z(fact(n - l - 1)) / (2 * xn * from_z(fact(n + l)));
  const X v = integrate_half_line([&](const xfloat& r) {
    const xfloat rho = a * r;
    const xfloat R = pow(rho, static_cast<long>(l)) * exp(-rho / 2) *
                     laguerre(n - l - 1, 2 * l + 1, cx(rho)).re;
    return cx(norm2 * R * R * r * r);
  });
  return v.re;
}

}  // namespace oracle
