#include "wadd/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "detail/kummer.hpp"
#include "wadd/polynomials.hpp"

namespace wadd {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_radial_pair(double r0, double r) {
  if (!(r0 >= 0.0) || !(r0 < r) || !std::isfinite(r)) {
    throw Error(ErrorKind::GeometryViolation, "expected 0 <= r0 < r");
  }
}

void check_geometry(const GeometryConfig& g) { check_radial_pair(g.r0, g.r); }

void guard_kappa(cd kappa, double guard) {
  const double n = std::round(kappa.real());
  if (n >= 1.0 && std::abs(kappa - cd(n, 0.0)) < guard) {
    throw Error(ErrorKind::NearPole,
                "kappa is within " + std::to_string(guard) + " of the positive integer " +
                    std::to_string(static_cast<long>(n)) +
                    "; use verify_kappa_integer_limit");
  }
}

// Lazily extended table of series coefficients, built by a first-order
// recurrence c_l = c_{l-1} * step(l).
template <class V, class Step>
class CoefTable {
 public:
  CoefTable(V c0, Step step) : step_(step) { c_.push_back(c0); }
  const V& operator[](long l) {
    while (static_cast<long>(c_.size()) <= l) {
      const long k = static_cast<long>(c_.size());
      c_.push_back(c_.back() * step_(k));
    }
    return c_[l];
  }

 private:
  Step step_;
  std::vector<V> c_;
};

template <class V, class Step>
CoefTable<V, Step> make_table(V c0, Step step) {
  return CoefTable<V, Step>(std::move(c0), step);
}

SeriesOutcome fixed_sum(const std::vector<cd>& terms) {
  SeriesOptions o;
  o.fixed_terms = static_cast<long>(terms.size());
  return sum_series([&](long k) { return terms[k]; }, o);
}

cd m_half(cd kappa, double z, bool deriv) { return whittaker_m({kappa, 0.5}, z, deriv); }
cd w_half(cd kappa, double z, bool deriv) { return whittaker_w({kappa, 0.5}, z, deriv); }

// (M'(y/2) W(x/2) - M(y/2) W'(x/2)) / R
cd hostler_bracket(cd kappa, const GeometryConfig& g) {
  const double hy = g.y / 2.0;
  const double hx = g.x / 2.0;
  return (m_half(kappa, hy, true) * w_half(kappa, hx, false) -
          m_half(kappa, hy, false) * w_half(kappa, hx, true)) /
         g.R;
}

// Coefficients below this are recomputed in extended range, since the
// matching W factor is then close to overflowing.
constexpr double kTinyCoef = 1e-250;

// (1-kappa)_l / (2l)! * M_{kappa,l+1/2}(r0) W_{kappa,l+1/2}(r) / (r r0) with
// every factor in extended range. With limit_one the rising factorial is
// replaced by (l-1)!, its kappa = 1 limit after dividing out (1 - kappa).
cd wide_term(cd kappa, long l, double r0, double r, bool limit_one = false) {
  PrecisionScope scope(30);
  const XComplex k = num::from_std<xfloat>(kappa);
  const XComplex mu(xfloat(l) + 0.5);
  const XComplex one(xfloat(1));
  XComplex coef = limit_one ? XComplex(tgamma(xfloat(l))) : rising(one - k, l);
  coef = coef / tgamma(xfloat(2 * l + 1));
  const xfloat x0(r0);
  const XComplex m =
      whittaker_m_reduced(XWhittakerOrder{k, mu}, XComplex(x0)) * pow(x0, l);
  const XComplex w = whittaker_w(XWhittakerOrder{k, mu}, xfloat(r));
  return num::to_std(coef * m * w / xfloat(r));
}

// Evaluates f in double; empty when the value over- or underflows.
template <class F>
std::optional<cd> in_range(double coef_mag, F&& f) {
  if (!(coef_mag > kTinyCoef)) return std::nullopt;
  try {
    const cd v = f();
    if (std::isfinite(std::abs(v))) return v;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
  }
  return std::nullopt;
}

}  // namespace

GeometryConfig geometry_from(double r, double r0, double gamma) {
  GeometryConfig g;
  g.r = r;
  g.r0 = r0;
  g.gamma = gamma;
  const double s = std::sin(gamma / 2.0);
  const double c = std::cos(gamma / 2.0);
  const double d = r - r0;
  g.R = std::sqrt(d * d + 4.0 * r * r0 * s * s);
  g.x = r + r0 + g.R;
  g.y = g.x > 0.0 ? 4.0 * r * r0 * c * c / g.x : 0.0;
  return g;
}

IdentityReport make_report(std::string id, ComplexScalar lhs, ComplexScalar rhs,
                           SeriesOutcome lhs_diag, std::optional<SeriesOutcome> rhs_diag) {
  IdentityReport rep;
  rep.identity_id = std::move(id);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_err = std::abs(lhs - rhs);
  const double scale = std::max({std::abs(lhs), std::abs(rhs), kRelErrFloor});
  rep.rel_err = rep.abs_err / scale;
  rep.lhs_diag = std::move(lhs_diag);
  rep.rhs_diag = std::move(rhs_diag);
  return rep;
}

IdentityReport verify_whittaker_addition(ComplexScalar kappa, const GeometryConfig& geo,
                                         const VerifyOptions& opts) {
  check_geometry(geo);
  guard_kappa(kappa, opts.kappa_guard);
  const double c = std::cos(geo.gamma);
  const double r0 = geo.r0;
  // (1-kappa)_l r0^l / (2l)!
  auto coef = make_table(cd(1.0), [&](long l) {
    return (static_cast<double>(l) - kappa) * r0 /
           (static_cast<double>(2 * l - 1) * static_cast<double>(2 * l));
  });
  auto term = [&](long l) -> cd {
    const cd cl = coef[l];
    if (kappa.imag() == 0.0 && kappa.real() == std::round(kappa.real()) && kappa.real() >= 1.0 &&
        kappa.real() <= static_cast<double>(l)) {
      return 0.0;  // (1-kappa)_l vanishes
    }
    const double pl = legendre_p(static_cast<int>(l), c);
    const double mu = l + 0.5;
    const auto v = in_range(std::abs(cl), [&] {
      return cl * whittaker_m_reduced({kappa, mu}, cd(r0)) * whittaker_w({kappa, mu}, geo.r);
    });
    return v ? *v * pl / geo.r : wide_term(kappa, l, r0, geo.r) * pl;
  };
  SeriesOutcome lhs = sum_series(term, opts.series);
  return make_report("whittaker_addition", value_of(lhs), hostler_bracket(kappa, geo), lhs);
}

IdentityReport verify_kappa_integer_limit(int n, const GeometryConfig& geo,
                                          const VerifyOptions& opts) {
  if (n != 1) {
    throw Error(ErrorKind::UnsupportedOrder, "the integer-kappa limit is implemented for n = 1 only");
  }
  check_geometry(geo);
  const double c = std::cos(geo.gamma);
  const double r0 = geo.r0;
  // (l-1)! r0^l / (2l)! for l >= 1, indexed from k = l - 1
  auto coef = make_table(r0 / 2.0, [&](long k) {
    const double l = static_cast<double>(k);
    return l * r0 / ((2.0 * l + 1.0) * (2.0 * l + 2.0));
  });
  auto term = [&](long k) -> cd {
    const long l = k + 1;
    const double cl = coef[k];
    const double pl = legendre_p(static_cast<int>(l), c);
    const double mu = l + 0.5;
    const auto v = in_range(cl, [&] {
      return cl * whittaker_m_reduced({1.0, mu}, cd(r0)) * whittaker_w({1.0, mu}, geo.r);
    });
    return v ? *v * pl / geo.r : wide_term(1.0, l, r0, geo.r, true) * pl;
  };
  SeriesOutcome lhs = sum_series(term, opts.series);

  // f(kappa) = bracket / R - M_{kappa,1/2}(r0) W_{kappa,1/2}(r) / (r r0), which
  // vanishes at kappa = 1; the right-hand side is -f'(1).
  auto f = [&](double kap) -> cd {
    const cd k(kap, 0.0);
    const cd mr = whittaker_m_reduced({k, 0.5}, cd(r0));
    return hostler_bracket(k, geo) - mr * w_half(k, geo.r, false) / geo.r;
  };
  constexpr int kLevels = 12;
  double h = 0.1;
  std::vector<std::vector<cd>> table;
  cd best = 0.0;
  double best_err = INFINITY;
  for (int i = 0; i < kLevels; ++i, h /= 2.0) {
    if (h < 1e-8) break;
    std::vector<cd> row(i + 1);
    row[0] = (f(1.0 + h) - f(1.0 - h)) / (2.0 * h);
    double p4 = 1.0;
    for (int j = 1; j <= i; ++j) {
      p4 *= 4.0;
      row[j] = row[j - 1] + (row[j - 1] - table[i - 1][j - 1]) / (p4 - 1.0);
    }
    if (i > 0) {
      const double err = std::abs(row[i] - table[i - 1][i - 1]);
      if (err < best_err) {
        best_err = err;
        best = row[i];
      } else if (i > 3) {
        break;  // rounding has taken over
      }
      if (err <= 1e-12 * std::abs(row[i])) break;
    }
    table.push_back(std::move(row));
  }
  if (!(best_err <= 1e-6 * std::max(std::abs(best), kRelErrFloor))) {
    throw Error(ErrorKind::DerivativeStepUnderflow,
                "kappa derivative did not settle before the step became too small");
  }
  SeriesOutcome rhs_diag;
  rhs_diag.value = num::from_std<double>(-best);
  rhs_diag.n_terms = static_cast<long>(table.size()) + 1;
  rhs_diag.tail_estimate = best_err;
  return make_report("kappa_integer_limit", value_of(lhs), -best, lhs, rhs_diag);
}

namespace {

// Gamma(l+1-kappa)/(2l)! evaluated through log-gamma.
cd gamma_over_factorial(cd kappa, long l) {
  const cd lg = log_gamma(cd(static_cast<double>(l) + 1.0) - kappa);
  return std::exp(lg - std::lgamma(2.0 * static_cast<double>(l) + 1.0));
}

SeriesOutcome collinear_sum(cd kappa, double r0, double r, double sign,
                            const SeriesOptions& opts) {
  const cd g1 = gamma(1.0 - kappa);
  auto term = [&](long l) -> cd {
    const double mu = l + 0.5;
    const double s = (l % 2 == 0) ? 1.0 : sign;
    const cd cl = gamma_over_factorial(kappa, l);
    const auto v = in_range(std::abs(cl), [&] {
      return cl * whittaker_m({kappa, mu}, r0) * whittaker_w({kappa, mu}, r);
    });
    return v ? s * *v / (r * r0) : s * g1 * wide_term(kappa, l, r0, r);
  };
  return sum_series(term, opts);
}

}  // namespace

IdentityReport verify_gamma_zero(ComplexScalar kappa, double r0, double r,
                                 const VerifyOptions& opts) {
  check_radial_pair(r0, r);
  if (!(r0 > 0.0)) throw Error(ErrorKind::GeometryViolation, "expected r0 > 0");
  guard_kappa(kappa, opts.kappa_guard);
  SeriesOutcome lhs = collinear_sum(kappa, r0, r, 1.0, opts.series);
  const cd g = gamma(1.0 - kappa);
  const cd rhs = g / (r - r0) *
                 (m_half(kappa, r0, true) * w_half(kappa, r, false) -
                  m_half(kappa, r0, false) * w_half(kappa, r, true));
  return make_report("gamma_zero", value_of(lhs), rhs, lhs);
}

IdentityReport verify_gamma_pi(ComplexScalar kappa, double r0, double r,
                               const VerifyOptions& opts) {
  check_radial_pair(r0, r);
  if (!(r0 > 0.0)) throw Error(ErrorKind::GeometryViolation, "expected r0 > 0");
  guard_kappa(kappa, opts.kappa_guard);
  SeriesOutcome lhs = collinear_sum(kappa, r0, r, -1.0, opts.series);
  const cd rhs = gamma(1.0 - kappa) * w_half(kappa, r + r0, false) / (r + r0);
  return make_report("gamma_pi", value_of(lhs), rhs, lhs);
}

IdentityReport verify_m_exp_sum(ComplexScalar kappa, ComplexScalar z,
                                const VerifyOptions& opts) {
  guard_kappa(kappa, opts.kappa_guard);
  // (-1)^l (1-kappa)_l z^l / (2l)!
  auto coef = make_table(cd(1.0), [&](long l) {
    return -(static_cast<double>(l) - kappa) * z /
           (static_cast<double>(2 * l - 1) * static_cast<double>(2 * l));
  });
  auto term = [&](long l) -> cd {
    const cd cl = coef[l];
    if (cl == 0.0) return 0.0;
    return cl * whittaker_m_reduced({kappa, l + 0.5}, z);
  };
  SeriesOutcome lhs = sum_series(term, opts.series);
  return make_report("m_exp_sum", value_of(lhs), std::exp(-z / 2.0), lhs);
}

IdentityReport verify_graf_2d(double k, double r0, double r, double phi,
                              const VerifyOptions& opts) {
  if (!(k > 0.0)) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  check_radial_pair(r0, r);
  auto term = [&](long n) -> cd {
    const double nu = static_cast<double>(n);
    const double i = bessel_modified(nu, k * r0, BesselKind::I);
    if (i == 0.0) return 0.0;
    const double kk = bessel_modified(nu, k * r, BesselKind::K);
    const double w = n == 0 ? 1.0 : 2.0 * std::cos(nu * phi);
    return w * i * kk;
  };
  SeriesOutcome lhs = sum_series(term, opts.series);
  const GeometryConfig g = geometry_from(r, r0, phi);
  const double rhs = bessel_modified(0.0, k * g.R, BesselKind::K);
  return make_report("graf_2d", value_of(lhs), rhs, lhs);
}

IdentityReport verify_gegenbauer_addition(double nu, double r0, double r, double gamma_,
                                          const VerifyOptions& opts) {
  if (!(nu > 0.0) || std::floor(2.0 * nu) != 2.0 * nu) {
    throw Error(ErrorKind::UnsupportedOrder, "Gegenbauer addition needs 2*nu a positive integer");
  }
  check_radial_pair(r0, r);
  const double c = std::cos(gamma_);
  const double pre = std::pow(2.0, nu) * std::tgamma(nu) / std::pow(r, nu);
  auto term = [&](long n) -> cd {
    const double order = nu + static_cast<double>(n);
    const double rp = std::pow(r0, static_cast<double>(n));
    if (rp == 0.0) return 0.0;
    const double i = bessel_i_scaled(order, r0);
    const double kk = bessel_modified(order, r, BesselKind::K);
    return pre * order * kk * rp * i * gegenbauer_c(static_cast<int>(n), nu, c);
  };
  SeriesOutcome lhs = sum_series(term, opts.series);
  const GeometryConfig g = geometry_from(r, r0, gamma_);
  const double rhs = bessel_modified(nu, g.R, BesselKind::K) / std::pow(g.R, nu);
  return make_report("gegenbauer_addition", value_of(lhs), rhs, lhs);
}

IdentityReport verify_spherical_addition(int l, double theta, double phi, double theta0,
                                         double phi0) {
  if (l < 0) throw Error(ErrorKind::IndexOutOfRange, "degree must be >= 0");
  auto term = [&](long k) -> cd {
    const int m = static_cast<int>(k) - l;
    return spherical_harmonic(l, m, theta, phi) * std::conj(spherical_harmonic(l, m, theta0, phi0));
  };
  SeriesOptions o;
  o.fixed_terms = 2 * l + 1;
  SeriesOutcome lhs = sum_series(term, o);
  const double cg = std::clamp(std::cos(theta) * std::cos(theta0) +
                                   std::sin(theta) * std::sin(theta0) * std::cos(phi - phi0),
                               -1.0, 1.0);
  const double rhs = (2 * l + 1) * legendre_p(l, cg) / (4.0 * kPi);
  return make_report("spherical_addition", value_of(lhs), rhs, lhs);
}

namespace {

// (n-l-1)!/(n+l)! through log-gamma.
double factorial_ratio(long a, long b) {
  return std::exp(std::lgamma(static_cast<double>(a) + 1.0) -
                  std::lgamma(static_cast<double>(b) + 1.0));
}

}  // namespace

IdentityReport verify_laguerre_addition(int n, const GeometryConfig& geo) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "n must be >= 1");
  check_geometry(geo);
  const double c = std::cos(geo.gamma);
  const double rr = geo.r * geo.r0;
  std::vector<cd> terms;
  for (int l = 0; l < n; ++l) {
    const int deg = n - l - 1;
    terms.emplace_back((2.0 * l + 1.0) * factorial_ratio(deg, n + l) * std::pow(rr, l) *
                       laguerre(deg, 2 * l + 1, geo.r) * laguerre(deg, 2 * l + 1, geo.r0) *
                       legendre_p(l, c));
  }
  SeriesOutcome lhs = fixed_sum(terms);
  const double hx = geo.x / 2.0;
  const double hy = geo.y / 2.0;
  const double rhs = (geo.x * laguerre(n - 1, 1, hx) * laguerre(n, 0, hy) -
                      geo.y * laguerre(n - 1, 1, hy) * laguerre(n, 0, hx)) /
                     (2.0 * geo.R);
  return make_report("laguerre_addition", value_of(lhs), rhs, lhs);
}

namespace {

mpq_class factorial_q(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return mpq_class(f);
}

mpq_class pow_q(const mpq_class& b, long e) {
  mpq_class r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

QuadraticSurd laguerre_surd(int n, int alpha, const QuadraticSurd& x) {
  const mpq_class& d = x.d();
  QuadraticSurd l0 = QuadraticSurd::rational(1, d);
  if (n <= 0) return n == 0 ? l0 : QuadraticSurd::rational(0, d);
  QuadraticSurd l1 = -x + mpq_class(1 + alpha);
  for (int k = 1; k < n; ++k) {
    QuadraticSurd l2 =
        ((-x + mpq_class(2 * k + 1 + alpha)) * l1 - l0 * mpq_class(k + alpha)) / mpq_class(k + 1);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

// Exact square root of a non-negative rational, if it exists.
std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  mpq_class s(sn, sd);
  s.canonicalize();
  return s;
}

ExactReport exact_report(std::string id, mpq_class lhs, mpq_class rhs, bool comparable = true) {
  ExactReport rep;
  rep.identity_id = std::move(id);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.residual = rep.lhs - rep.rhs;
  rep.residual.canonicalize();
  rep.exact = comparable && rep.residual == 0;
  return rep;
}

}  // namespace

ExactReport verify_laguerre_addition_exact(int n, const mpq_class& r, const mpq_class& r0,
                                           const mpq_class& cos_gamma) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "n must be >= 1");
  if (!(r0 >= 0) || !(r0 < r)) throw Error(ErrorKind::GeometryViolation, "expected 0 <= r0 < r");
  if (cos_gamma < -1 || cos_gamma > 1) {
    throw Error(ErrorKind::InvalidArgument, "cos(gamma) must lie in [-1, 1]");
  }
  const mpq_class rr = r * r0;
  mpq_class lhs = exact_rational_sum(
      [&](long l) {
        const int deg = n - static_cast<int>(l) - 1;
        const int a = 2 * static_cast<int>(l) + 1;
        return mpq_class(a * factorial_q(deg) / factorial_q(n + l) * pow_q(rr, l) *
                         laguerre(deg, a, r) * laguerre(deg, a, r0) *
                         legendre_p(static_cast<int>(l), cos_gamma));
      },
      n);

  mpq_class d = r * r * 1 + r0 * r0 - 2 * r * r0 * cos_gamma;
  d.canonicalize();
  const mpq_class s = r + r0;
  const QuadraticSurd root = QuadraticSurd::root(d);
  const QuadraticSurd x = root + s;
  const QuadraticSurd y = -root + s;
  const mpq_class half(1, 2);
  const QuadraticSurd num = x * laguerre_surd(n - 1, 1, x * half) * laguerre_surd(n, 0, y * half) -
                            y * laguerre_surd(n - 1, 1, y * half) * laguerre_surd(n, 0, x * half);
  // rhs = num / (2 sqrt(d)) = a / (2 sqrt(d)) + b / 2
  if (auto sq = rational_sqrt(d)) {
    mpq_class rhs = (num.a() + num.b() * *sq) / (2 * *sq);
    return exact_report("laguerre_addition", lhs, rhs);
  }
  mpq_class rhs = num.b() / 2;
  return exact_report("laguerre_addition", lhs, rhs, num.a() == 0);
}

namespace {

template <class S>
S symmetric_lhs_term(int n, int l, const S& u, const S& v, bool alternate) {
  const int deg = n - l;
  const int a = 2 * l + 1;
  S uv = u * v;
  S p(1);
  for (int i = 0; i < l; ++i) p = p * uv;
  S w = S(2 * l + 1) * p * laguerre(deg, a, u) * laguerre(deg, a, v);
  if (alternate && (l % 2) == 1) w = -w;
  return w;
}

}  // namespace

IdentityReport verify_laguerre_symmetric(int n, ComplexScalar u, ComplexScalar v,
                                         LaguerreVariant variant, const VerifyOptions& opts) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "n must be >= 0");
  const bool pi = variant == LaguerreVariant::Pi;
  if (!pi && u == v && !opts.allow_confluent) {
    throw Error(ErrorKind::ConfluentPoint, "u == v; enable allow_confluent for the limit form");
  }
  std::vector<cd> terms;
  for (int l = 0; l <= n; ++l) {
    terms.push_back(factorial_ratio(n - l, n + l + 1) * symmetric_lhs_term<cd>(n, l, u, v, pi));
  }
  SeriesOutcome lhs = fixed_sum(terms);
  cd rhs;
  if (pi) {
    rhs = laguerre(n, 1, u + v);
  } else if (u == v) {
    const cd a = laguerre(n, 1, u);
    rhs = (a - u * laguerre(n - 1, 2, u)) * laguerre(n + 1, 0, u) + u * a * a;
  } else {
    rhs = (u * laguerre(n, 1, u) * laguerre(n + 1, 0, v) -
           v * laguerre(n, 1, v) * laguerre(n + 1, 0, u)) /
          (u - v);
  }
  return make_report(pi ? "laguerre_symmetric_pi" : "laguerre_symmetric", value_of(lhs), rhs, lhs);
}

ExactReport verify_laguerre_symmetric_exact(int n, const mpq_class& u, const mpq_class& v,
                                            LaguerreVariant variant, bool allow_confluent) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "n must be >= 0");
  const bool pi = variant == LaguerreVariant::Pi;
  if (!pi && u == v && !allow_confluent) {
    throw Error(ErrorKind::ConfluentPoint, "u == v; enable allow_confluent for the limit form");
  }
  mpq_class lhs = exact_rational_sum(
      [&](long l) {
        const int li = static_cast<int>(l);
        return mpq_class(factorial_q(n - l) / factorial_q(n + l + 1) *
                         symmetric_lhs_term<mpq_class>(n, li, u, v, pi));
      },
      n + 1);
  mpq_class rhs;
  if (pi) {
    rhs = laguerre(n, 1, mpq_class(u + v));
  } else if (u == v) {
    const mpq_class a = laguerre(n, 1, u);
    rhs = (a - u * laguerre(n - 1, 2, u)) * laguerre(n + 1, 0, u) + u * a * a;
  } else {
    rhs = (u * laguerre(n, 1, u) * laguerre(n + 1, 0, v) -
           v * laguerre(n, 1, v) * laguerre(n + 1, 0, u)) /
          (u - v);
  }
  return exact_report(pi ? "laguerre_symmetric_pi" : "laguerre_symmetric", lhs, rhs);
}

namespace {

template <class T>
Complex<T> rising_t(const Complex<T>& a, long n) {
  Complex<T> p(T(1));
  for (long j = 0; j < n; ++j) p = p * (a + T(j));
  return p;
}

// Terms (-1)^l C(n,l) (2mu+2l)/(2mu+l)_{n+1} W_{kappa,mu+l}(r); the l = 0
// coefficient is written as 1/(2mu+1)_n so that mu = 0 is allowed.
template <class T>
BasicSeriesOutcome<T> w_downward_lhs(int n, const Complex<T>& kappa, const Complex<T>& mu,
                                     const T& r) {
  const Complex<T> two_mu = mu * T(2);
  std::function<Complex<T>(long)> term = [&](long l) -> Complex<T> {
    Complex<T> c;
    if (l == 0) {
      c = Complex<T>(T(1)) / rising_t(two_mu + T(1), n);
    } else {
      c = (two_mu + T(2 * l)) * T(binomial(n, l)) / rising_t(two_mu + T(l), n + 1);
    }
    if (l % 2 == 1) c = -c;
    return c * detail::whit_w<T>(kappa, mu + T(l), r, false);
  };
  SeriesOptions o;
  o.fixed_terms = n + 1;
  return sum_series_t<T>(term, o);
}

template <class T>
Complex<T> w_downward_rhs(int n, const Complex<T>& kappa, const Complex<T>& mu, const T& r) {
  using std::pow;
  const T half_n = T(n) / T(2);
  Complex<T> w = detail::whit_w<T>(kappa - half_n, mu + half_n, r, false) * pow(r, -half_n);
  return (n % 2 == 0) ? w : -w;
}

}  // namespace

IdentityReport verify_w_downward_sum(int n, ComplexScalar kappa, ComplexScalar mu, double r) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "n must be >= 0");
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "r must be positive");
  if (num::is_nonpositive_integer(num::from_std<double>(2.0 * mu + 1.0))) {
    throw Error(ErrorKind::ParameterPole, "2*mu is a negative integer");
  }
  const Complex<double> k = num::from_std<double>(kappa);
  const Complex<double> m = num::from_std<double>(mu);
  SeriesOutcome lhs = w_downward_lhs<double>(n, k, m, r);
  Complex<double> rhs = w_downward_rhs<double>(n, k, m, r);
  std::optional<SeriesOutcome> rdiag;
  // Alternating binomial weights amplify the error of each W by the
  // condition number; redo both sides with enough extra digits.
  if (lhs.condition_number > 10.0 && std::isfinite(lhs.condition_number)) {
    const int digits =
        std::max(30, 26 + static_cast<int>(std::ceil(std::log10(lhs.condition_number))));
    PrecisionScope scope(digits);
    const Complex<xfloat> xk = detail::cvt<xfloat>(k);
    const Complex<xfloat> xm = detail::cvt<xfloat>(m);
    lhs = to_hardware(w_downward_lhs<xfloat>(n, xk, xm, xfloat(r)));
    rhs = detail::cvt<double>(w_downward_rhs<xfloat>(n, xk, xm, xfloat(r)));
    SeriesOutcome d;
    d.value = rhs;
    d.n_terms = 1;
    d.digits = digits;
    rdiag = d;
  }
  return make_report("w_downward_sum", value_of(lhs), num::to_std(rhs), lhs, rdiag);
}

namespace {

// Left-hand side of the generalized addition formula at scalar type T.
template <class T>
BasicSeriesOutcome<T> pi_general_lhs(const Complex<T>& kappa, const Complex<T>& mu, const T& r0,
                                     const T& r, const SeriesOptions& opts,
                                     std::vector<Complex<T>>* keep = nullptr) {
  const Complex<T> a = mu - kappa + T(0.5);
  const Complex<T> two_mu = mu * T(2);
  const Complex<T> scale = num::pow(r, -(mu + T(0.5)));
  auto coef = make_table(Complex<T>(T(1)), [&](long k) {
    const T l(k - 1);
    const Complex<T> num_ = (a + l) * (two_mu + l) * r0;
    const Complex<T> den = (two_mu + l * T(2)) * (two_mu + l * T(2) + T(1)) * (l + T(1));
    return num_ / den;
  });
  std::function<Complex<T>(long)> term = [&](long l) -> Complex<T> {
    Complex<T> cl = coef[l];
    if (l % 2 == 1) cl = -cl;
    Complex<T> t(T(0));
    if (!(cl.re == T(0) && cl.im == T(0))) {
      const Complex<T> order = mu + T(l);
      const Complex<T> m = detail::whit_m_reduced<T>(kappa, order, Complex<T>(r0));
      const Complex<T> w = detail::whit_w<T>(kappa, order, r, false);
      t = cl * m * w * scale;
    }
    if (keep) keep->push_back(t);
    return t;
  };
  return sum_series_t<T>(term, opts);
}

template <class T>
Complex<T> pi_general_rhs(const Complex<T>& kappa, const Complex<T>& mu, const T& r0,
                          const T& r) {
  const T s = r + r0;
  return num::pow(s, -(mu + T(0.5))) * detail::whit_w<T>(kappa, mu, s, false);
}

void check_pi_general(ComplexScalar mu, double r0, double r) {
  check_radial_pair(r0, r);
  if (!(mu.real() > 0.0)) throw Error(ErrorKind::InvalidArgument, "Re mu must be positive");
}

}  // namespace

IdentityReport verify_pi_addition_general(ComplexScalar kappa, ComplexScalar mu, double r0,
                                          double r, const VerifyOptions& opts) {
  check_pi_general(mu, r0, r);
  const Complex<double> k = num::from_std<double>(kappa);
  const Complex<double> m = num::from_std<double>(mu);
  SeriesOptions so = opts.series;
  so.precision = PrecisionMode::Hardware;
  if (so.tail.kind == TailPolicy::Kind::RatioTest) {
    so.tail = TailPolicy::asymptotic_rate(r0 / r, 2.0 * mu.real() - 1.0);
  }
  const cd rhs = num::to_std(pi_general_rhs<double>(k, m, r0, r));
  SeriesOutcome lhs;
  bool done = false;
  try {
    lhs = pi_general_lhs<double>(k, m, r0, r, so);
    done = lhs.condition_number <= 1e3;
  } catch (const SeriesNoConvergence&) {
    // retried below in extended precision
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
  }
  int digits = 16;
  double cond = done ? lhs.condition_number : 1.0;
  while (!done) {
    digits = std::max(30, 26 + static_cast<int>(std::ceil(std::log10(std::max(cond, 1.0)))));
    if (digits > detail::kMaxDigits) {
      throw Error(ErrorKind::PrecisionExhausted,
                  "generalized addition series needs more than " +
                      std::to_string(detail::kMaxDigits) + " digits (condition " +
                      std::to_string(cond) + ")");
    }
    PrecisionScope scope(digits);
    SeriesOptions xo = so;
    xo.precision = PrecisionMode::Extended;
    xo.digits = digits;
    xo.rel_tol = std::min(so.rel_tol, 1e-17);
    BasicSeriesOutcome<xfloat> xl = pi_general_lhs<xfloat>(
        detail::cvt<xfloat>(k), detail::cvt<xfloat>(m), xfloat(r0), xfloat(r), xo);
    const double c2 = xl.condition_number;
    if (std::log10(c2) + 19.0 <= digits || !std::isfinite(c2)) {
      lhs = to_hardware(xl);
      done = true;
    } else {
      cond = c2;
    }
  }
  SeriesOutcome rdiag;
  rdiag.value = num::from_std<double>(rhs);
  rdiag.digits = digits;
  rdiag.n_terms = 1;
  return make_report("pi_addition_general", value_of(lhs), rhs, lhs, rdiag);
}

PiAdditionTerms pi_addition_terms(double kappa, double mu, double r0, double r, int digits,
                                  long min_terms) {
  check_pi_general(mu, r0, r);
  if (digits < 30) throw Error(ErrorKind::InvalidArgument, "term listing needs >= 30 digits");
  PrecisionScope scope(digits);
  const Complex<xfloat> k{xfloat(kappa), xfloat(0)};
  const Complex<xfloat> m{xfloat(mu), xfloat(0)};
  const xfloat xr0(r0);
  const xfloat xr(r);
  SeriesOptions so;
  so.precision = PrecisionMode::Extended;
  so.digits = digits;
  so.rel_tol = std::pow(10.0, -std::min(digits - 10, 40));
  so.max_terms = 100000;
  so.min_terms = std::max<long>(min_terms, 1);
  so.tail = TailPolicy::asymptotic_rate(r0 / r, 2.0 * mu - 1.0);
  std::vector<Complex<xfloat>> raw;
  BasicSeriesOutcome<xfloat> lhs = pi_general_lhs<xfloat>(k, m, xr0, xr, so, &raw);
  const Complex<xfloat> rhs = pi_general_rhs<xfloat>(k, m, xr0, xr);
  PiAdditionTerms out;
  out.digits = digits;
  out.n_terms = lhs.n_terms;
  out.condition_number = lhs.condition_number;
  out.t.reserve(raw.size());
  for (std::size_t l = 0; l < raw.size(); ++l) {
    Complex<xfloat> t = raw[l] / rhs;
    if (l % 2 == 1) t = -t;
    out.t.push_back(t.re.to_double());
  }
  const Complex<xfloat> ratio = lhs.value / rhs;
  out.final_sum = ratio.re.to_double();
  out.rel_err = num::to_double(num::abs(ratio - Complex<xfloat>(xfloat(1))));
  return out;
}

double pi_addition_surrogate_term(double kappa, double mu, double r0, double r, long ell) {
  check_pi_general(mu, r0, r);
  if (ell < 0) throw Error(ErrorKind::IndexOutOfRange, "ell must be >= 0");
  if (r0 == 0.0) return 0.0;
  const double l = static_cast<double>(ell);
  const double a = mu - kappa + 0.5;
  const double w = whittaker_w({kappa, mu}, r + r0).real();
  // log of 2^{2mu-1} (r+r0)^{mu+1/2} / (sqrt(pi) r^{2mu} W)
  const double lead = (2.0 * mu - 1.0) * std::log(2.0) + (mu + 0.5) * std::log(r + r0) -
                      0.5 * std::log(kPi) - 2.0 * mu * std::log(r) - std::log(w);
  // (a)_l / ((l+2mu)_l l!) * Gamma(l+kappa+mu) * (4 r0 / r)^l
  const double lc = std::lgamma(a + l) - std::lgamma(a) - std::lgamma(2.0 * l + 2.0 * mu) +
                    std::lgamma(l + 2.0 * mu) - std::lgamma(l + 1.0) +
                    std::lgamma(l + kappa + mu) + l * std::log(4.0 * r0 / r);
  return std::exp(lead + lc);
}

long pi_addition_surrogate_first_below(double kappa, double mu, double r0, double r,
                                       double threshold, long max_ell) {
  for (long l = 0; l <= max_ell; ++l) {
    if (pi_addition_surrogate_term(kappa, mu, r0, r, l) < threshold) return l;
  }
  throw Error(ErrorKind::NoConvergence, "surrogate terms stay above the threshold");
}

IdentityReport verify_m_gegenbauer_sum(ComplexScalar kappa, double mu, ComplexScalar z,
                                       double gamma_, const VerifyOptions& opts) {
  if (!(mu > 0.0)) throw Error(ErrorKind::InvalidArgument, "mu must be positive");
  const double c = std::cos(gamma_);
  const cd a = mu - kappa + 0.5;
  // (mu-kappa+1/2)_l z^l / (2mu)_{2l}
  auto coef = make_table(cd(1.0), [&](long k) {
    const double l = static_cast<double>(k - 1);
    return (a + l) * z / ((2.0 * mu + 2.0 * l) * (2.0 * mu + 2.0 * l + 1.0));
  });
  auto term = [&](long l) -> cd {
    const cd cl = coef[l];
    if (cl == 0.0) return 0.0;
    const cd m = whittaker_m_reduced({kappa, mu + static_cast<double>(l)}, z);
    return cl * m * gegenbauer_c(static_cast<int>(l), mu, c);
  };
  SeriesOutcome lhs = sum_series(term, opts.series);
  const double ch = std::cos(gamma_ / 2.0);
  const cd rhs = std::exp(-z / 2.0) * kummer_m(a, mu + 0.5, ch * ch * z);
  return make_report("m_gegenbauer_sum", value_of(lhs), rhs, lhs);
}

namespace {

mpq_class rising_q(const mpq_class& a, long n) {
  mpq_class p = 1;
  for (long j = 0; j < n; ++j) p *= a + j;
  return p;
}

mpq_class binomial_q(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(b);
}

// C(n,l) (2nu+2l) / (2nu+l)_{n+1}
mpq_class binomial_term(long n, long l, const mpq_class& nu) {
  const mpq_class den = rising_q(2 * nu + l, n + 1);
  if (den == 0) throw Error(ErrorKind::PoleHit, "(2nu+l)_{n+1} vanishes at this nu");
  return mpq_class(binomial_q(n, l) * (2 * nu + 2 * l) / den);
}

}  // namespace

ExactReport verify_lemma_binomial(int N, const mpq_class& nu) {
  if (N < 0) throw Error(ErrorKind::IndexOutOfRange, "N must be >= 0");
  if (nu <= 0 && nu.get_den() == 1) {
    throw Error(ErrorKind::PoleHit, "nu is a non-positive integer");
  }
  const mpq_class den = rising_q(nu + mpq_class(1, 2), N);
  if (den == 0) throw Error(ErrorKind::PoleHit, "(nu+1/2)_N vanishes at this nu");
  mpq_class lhs = exact_rational_sum([&](long l) { return binomial_term(N, l, nu); }, N + 1);
  mpq_class rhs = 1 / den;
  return exact_report("lemma_binomial", lhs, rhs);
}

ExactReport verify_delta_corollary(int n, const mpq_class& mu) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "n must be >= 0");
  mpq_class lhs = exact_rational_sum(
      [&](long l) {
        mpq_class t = binomial_term(n, l, mu);
        return (l % 2 == 0) ? t : mpq_class(-t);
      },
      n + 1);
  return exact_report("delta_corollary", lhs, mpq_class(n == 0 ? 1 : 0));
}

}  // namespace wadd
