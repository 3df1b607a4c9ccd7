#include "wadd/green.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail/kummer.hpp"
#include "wadd/polynomials.hpp"

namespace wadd {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_point(const SphericalPoint& p) {
  if (!(p.r > 0.0) || !std::isfinite(p.r)) {
    throw Error(ErrorKind::InvalidArgument, "radius must be positive and finite");
  }
  if (!(p.theta >= 0.0 && p.theta <= kPi)) {
    throw Error(ErrorKind::InvalidArgument, "theta must lie in [0, pi]");
  }
  if (!(p.phi >= 0.0 && p.phi <= 2.0 * kPi)) {
    throw Error(ErrorKind::InvalidArgument, "phi must lie in [0, 2 pi]");
  }
}

void check_params(const CoulombParams& c) {
  if (!(c.g > 0.0) || !(c.k > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "g and k must be positive");
  }
}

void check_level(int n, double g) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "principal quantum number must be >= 1");
  if (!(g > 0.0)) throw Error(ErrorKind::InvalidArgument, "g must be positive");
}

void guard_kappa(double kappa, double guard) {
  const double n = std::round(kappa);
  if (guard > 0.0 && n >= 1.0 && std::abs(kappa - n) < guard) {
    throw Error(ErrorKind::NearPole, "g/(2k) is within the guard of a bound-state pole");
  }
}

struct Unit {
  double x, y, z;
};

Unit unit(const SphericalPoint& p) {
  const double st = std::sin(p.theta);
  return {st * std::cos(p.phi), st * std::sin(p.phi), std::cos(p.theta)};
}

// (M'(y) W(x) - M(y) W'(x)) for M, W of order (kappa, 1/2) at type T.
template <class T>
Complex<T> bracket(const Complex<T>& kappa, const T& ky, const T& kx) {
  const Complex<T> mu(T(0.5));
  const Complex<T> zy(ky);
  const Complex<T> m = detail::whit_m<T>(kappa, mu, zy, false);
  const Complex<T> dm = detail::whit_m<T>(kappa, mu, zy, true);
  const Complex<T> w = detail::whit_w<T>(kappa, mu, kx, false);
  const Complex<T> dw = detail::whit_w<T>(kappa, mu, kx, true);
  return dm * w - m * dw;
}

}  // namespace

double bound_energy(int n, double g) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "principal quantum number must be >= 1");
  return -g * g / (4.0 * static_cast<double>(n) * static_cast<double>(n));
}

long degeneracy(int n) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "principal quantum number must be >= 1");
  return static_cast<long>(n) * n;
}

ComplexScalar hydrogen_eigenfunction(const QuantumNumbers& qn, double g, const SphericalPoint& p) {
  check_level(qn.n, g);
  if (qn.l < 0 || qn.l > qn.n - 1 || std::abs(qn.m) > qn.l) {
    throw Error(ErrorKind::IndexOutOfRange, "need |m| <= l <= n - 1");
  }
  check_point(p);
  const int n = qn.n;
  const int l = qn.l;
  const double t = g * p.r / n;
  const double norm = std::exp(1.5 * std::log(g) - (l + 2) * std::log(static_cast<double>(n)) +
                               0.5 * (std::lgamma(n - l) - std::log(2.0) - std::lgamma(n + l + 1)));
  const double radial = norm * std::pow(g * p.r, l) * std::exp(-t / 2.0) *
                        laguerre(n - l - 1, 2 * l + 1, t);
  return radial * spherical_harmonic(l, qn.m, p.theta, p.phi);
}

PointGeometry point_geometry(const SphericalPoint& p, const SphericalPoint& p0) {
  const Unit a = unit(p);
  const Unit b = unit(p0);
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  const double sx = a.x + b.x, sy = a.y + b.y, sz = a.z + b.z;
  const double d2 = dx * dx + dy * dy + dz * dz;  // 2 (1 - cos gamma)
  const double s2 = sx * sx + sy * sy + sz * sz;  // 2 (1 + cos gamma)
  PointGeometry g;
  const double dr = p.r - p0.r;
  g.R = std::sqrt(dr * dr + p.r * p0.r * d2);
  g.x = p.r + p0.r + g.R;
  g.y = p.r * p0.r * s2 / g.x;
  g.cos_gamma = std::clamp((s2 - d2) / 4.0, -1.0, 1.0);
  return g;
}

double hostler_green(const CoulombParams& params, const SphericalPoint& p,
                     const SphericalPoint& p0, const GreenOptions& opts) {
  check_params(params);
  check_point(p);
  check_point(p0);
  const PointGeometry geo = point_geometry(p, p0);
  if (!(geo.R > 0.0)) throw Error(ErrorKind::CoincidentPoints, "Green's function is singular at p = p0");
  const double kappa = params.kappa();
  guard_kappa(kappa, opts.kappa_guard);
  const double k = params.k;
  const cd g1 = gamma(cd(1.0 - kappa, 0.0));
  cd b;
  const double dist = std::abs(kappa - std::round(kappa));
  if (kappa >= 0.5 && dist < 1e-2) {
    // The bracket vanishes at integer kappa; keep the digits it cancels.
    const int digits = 30 + static_cast<int>(std::ceil(-std::log10(std::max(dist, 1e-300))));
    PrecisionScope scope(std::min(digits, 400));
    const Complex<xfloat> xk{xfloat(kappa), xfloat(0)};
    b = num::to_std(detail::cvt<double>(bracket<xfloat>(xk, xfloat(k) * xfloat(geo.y),
                                                        xfloat(k) * xfloat(geo.x))));
  } else {
    b = num::to_std(bracket<double>(Complex<double>{kappa, 0.0}, k * geo.y, k * geo.x));
  }
  return (g1 * b).real() / (4.0 * kPi * geo.R);
}

namespace {

template <class T>
Complex<T> partial_wave_term(long l, double kappa, double zlo, double zhi) {
  const Complex<T> kap{T(kappa), T(0)};
  const Complex<T> order{T(static_cast<double>(l) + 0.5), T(0)};
  const T lo(zlo);
  const T hi(zhi);
  // Gamma(l+1-kappa) (zlo)^{l+1} / (2l)!
  Complex<T> lg = detail::log_gamma<T>(Complex<T>{T(static_cast<double>(l) + 1.0 - kappa), T(0)});
  Complex<T> lc = lg;
  {
    using std::lgamma;
    using std::log;
    lc.re = lc.re - lgamma(T(2 * l + 1)) + T(l + 1) * log(lo);
  }
  const Complex<T> c = num::exp(lc);
  const Complex<T> m = detail::whit_m_reduced<T>(kap, order, Complex<T>{lo, T(0)});
  const Complex<T> w = detail::whit_w<T>(kap, order, hi, false);
  return c * m * w;
}

}  // namespace

PartialWaveResult partial_wave_green(const CoulombParams& params, const SphericalPoint& p,
                                     const SphericalPoint& p0, const GreenOptions& opts) {
  check_params(params);
  check_point(p);
  check_point(p0);
  if (p.r == p0.r && !opts.allow_coincident_radii) {
    throw Error(ErrorKind::CoincidentRadii, "the radial ordering is undefined at r = r0");
  }
  const PointGeometry geo = point_geometry(p, p0);
  if (p.r == p0.r && !(geo.R > 0.0)) {
    throw Error(ErrorKind::CoincidentPoints, "Green's function is singular at p = p0");
  }
  const double kappa = params.kappa();
  guard_kappa(kappa, opts.kappa_guard);
  const double k = params.k;
  const double zlo = 2.0 * k * std::min(p.r, p0.r);
  const double zhi = 2.0 * k * std::max(p.r, p0.r);
  const double pre = 1.0 / (8.0 * kPi * k * p.r * p0.r);
  const double c = geo.cos_gamma;
  // At r = r0 both orderings give the same product, so their average is either one.
  // The terms then fall off only algebraically; the free-particle terms, whose sum
  // is known in closed form, are subtracted so the remainder decays quickly.
  const bool coincident = zlo == zhi;
  auto radial = [&](long l, double kap) {
    Complex<double> t{NAN, NAN};
    try {
      t = partial_wave_term<double>(l, kap, zlo, zhi);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow) throw;
    }
    if (!num::isfinite(t)) {
      PrecisionScope scope(30);
      t = detail::cvt<double>(partial_wave_term<xfloat>(l, kap, zlo, zhi));
    }
    return num::to_std(t);
  };
  auto term = [&](long l) -> cd {
    const double pl = legendre_p(static_cast<int>(l), c);
    cd t = radial(l, kappa);
    if (coincident) t -= radial(l, 0.0);
    return pre * pl * t;
  };
  SeriesOptions so = opts.series;
  if (coincident && so.fixed_terms == 0) so.fixed_terms = opts.coincident_terms;
  PartialWaveResult res;
  res.diag = sum_series(term, so);
  res.value = res.diag.value.re;
  if (coincident) res.value += free_green(k, p, p0);
  return res;
}

double free_green(double k, const SphericalPoint& p, const SphericalPoint& p0) {
  check_point(p);
  check_point(p0);
  const double R = point_geometry(p, p0).R;
  if (!(R > 0.0)) throw Error(ErrorKind::CoincidentPoints, "kernel is singular at p = p0");
  return std::exp(-k * R) / (4.0 * kPi * R);
}

double projection_kernel(int n, double g, const SphericalPoint& p, const SphericalPoint& p0,
                         ProjectionMethod method) {
  check_level(n, g);
  check_point(p);
  check_point(p0);
  if (method == ProjectionMethod::EigenSum) {
    cd s = 0.0;
    for (int l = 0; l < n; ++l) {
      for (int m = -l; m <= l; ++m) {
        const QuantumNumbers qn{n, l, m};
        s += hydrogen_eigenfunction(qn, g, p) * std::conj(hydrogen_eigenfunction(qn, g, p0));
      }
    }
    return s.real();
  }
  const PointGeometry geo = point_geometry(p, p0);
  if (!(geo.R > 0.0)) {
    throw Error(ErrorKind::CoincidentPoints, "use diagonal_density at p = p0");
  }
  const double s = g / (2.0 * n);
  const double b = geo.x * laguerre(n - 1, 1, s * geo.x) * laguerre(n, 0, s * geo.y) -
                   geo.y * laguerre(n - 1, 1, s * geo.y) * laguerre(n, 0, s * geo.x);
  const double n4 = std::pow(static_cast<double>(n), 4);
  return g * g * g / (16.0 * kPi * geo.R * n4) * std::exp(-s * (p.r + p0.r)) * b;
}

namespace {

// L_n L^1_{n-1} - t L_n L^2_{n-2} + t (L^1_{n-1})^2
double density_poly(int n, double t) {
  const double ln = laguerre(n, 0, t);
  const double l1 = laguerre(n - 1, 1, t);
  const double l2 = laguerre(n - 2, 2, t);
  return ln * l1 - t * ln * l2 + t * l1 * l1;
}

template <class F>
QuadratureResult laguerre_doubling(F f, double tol) {
  QuadratureResult res;
  double prev = NAN;
  for (int nodes = 8; nodes <= 512; nodes *= 2) {
    const QuadratureRule q = gauss_laguerre(nodes);
    double s = 0.0;
    for (int i = 0; i < nodes; ++i) {
      if (q.weights[i] != 0.0) s += q.weights[i] * f(q.nodes[i]);
    }
    res.value = s;
    res.nodes = nodes;
    if (!std::isnan(prev)) {
      res.change = std::abs(s - prev);
      if (res.change <= tol * std::abs(s)) return res;
    }
    prev = s;
  }
  throw Error(ErrorKind::NoConvergence, "quadrature did not stabilize at 512 nodes");
}

QuadratureRule golub_welsch(int n, double mu0, const std::vector<double>& diag,
                            const std::vector<double>& off) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    j(i, i) = diag[i];
    if (i + 1 < n) j(i, i + 1) = j(i + 1, i) = off[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  QuadratureRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    q.nodes[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    q.weights[i] = mu0 * v * v;
  }
  return q;
}

}  // namespace

double diagonal_density(int n, double g, double r) {
  check_level(n, g);
  if (!(r >= 0.0)) throw Error(ErrorKind::InvalidArgument, "r must be non-negative");
  const double t = g * r / n;
  const double n4 = std::pow(static_cast<double>(n), 4);
  return g * g * g / (8.0 * kPi * n4) * std::exp(-t) * density_poly(n, t);
}

double radial_distribution(int n, double g, double r) {
  return 4.0 * kPi * r * r * diagonal_density(n, g, r);
}

QuadratureRule gauss_laguerre(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "need at least one node");
  std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) d[i] = 2.0 * i + 1.0;
  for (int i = 0; i + 1 < n; ++i) e[i] = i + 1.0;
  return golub_welsch(n, 1.0, d, e);
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "need at least one node");
  std::vector<double> d(n, 0.0), e(n > 1 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) {
    const double k = i + 1.0;
    e[i] = k / std::sqrt(4.0 * k * k - 1.0);
  }
  return golub_welsch(n, 2.0, d, e);
}

QuadratureResult integrate_radial_distribution(int n, double g, double tol) {
  check_level(n, g);
  // r = n t / g turns the integrand into e^{-t} t^2 P(t) / (2n).
  QuadratureResult res = laguerre_doubling(
      [&](double t) { return t * t * density_poly(n, t) / (2.0 * n); }, tol);
  return res;
}

QuadratureResult laguerre_density_integral(int n, double tol) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "n must be >= 1");
  return laguerre_doubling([&](double t) { return t * t * density_poly(n, t); }, tol);
}

QuadratureResult eigenfunction_norm(const QuantumNumbers& qn, double g, double tol) {
  check_level(qn.n, g);
  if (qn.l < 0 || qn.l > qn.n - 1 || std::abs(qn.m) > qn.l) {
    throw Error(ErrorKind::IndexOutOfRange, "need |m| <= l <= n - 1");
  }
  const int n = qn.n;
  const int l = qn.l;
  // |psi|^2 r^2 dr with r = n t / g: the radial factor becomes
  // e^{-t} C t^{2l+2} (L^{2l+1}_{n-l-1}(t))^2.
  const double lc = 3.0 * std::log(g) - 2.0 * (l + 2) * std::log(static_cast<double>(n)) +
                    std::lgamma(n - l) - std::log(2.0) - std::lgamma(n + l + 1) +
                    2.0 * l * std::log(static_cast<double>(n)) + 3.0 * std::log(n / g);
  const double cnorm = std::exp(lc);
  QuadratureResult radial = laguerre_doubling(
      [&](double t) {
        const double lg = laguerre(n - l - 1, 2 * l + 1, t);
        return cnorm * std::pow(t, 2 * l + 2) * lg * lg;
      },
      tol);
  // Angular part: 2 pi times the Gauss-Legendre integral over cos(theta).
  QuadratureResult res;
  double prev = NAN;
  for (int nodes = 4; nodes <= 256; nodes *= 2) {
    const QuadratureRule q = gauss_legendre(nodes);
    double s = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double th = std::acos(std::clamp(q.nodes[i], -1.0, 1.0));
      s += q.weights[i] * std::norm(spherical_harmonic(l, qn.m, th, 0.0));
    }
    s *= 2.0 * kPi;
    res.value = s * radial.value;
    res.nodes = std::max(nodes, radial.nodes);
    if (!std::isnan(prev)) {
      res.change = std::abs(s - prev) * radial.value + radial.change;
      if (std::abs(s - prev) <= tol * std::abs(s)) return res;
    }
    prev = s;
  }
  throw Error(ErrorKind::NoConvergence, "angular quadrature did not stabilize");
}

}  // namespace wadd
