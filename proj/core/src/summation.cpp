#include "wadd/summation.hpp"

#include <cmath>
#include <string>

#include "detail/escalate.hpp"

namespace wadd {

void SeriesOptions::validate() const {
  if (!(rel_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "rel_tol must be positive");
  if (max_terms < 1) throw Error(ErrorKind::InvalidArgument, "max_terms must be at least 1");
  if (precision == PrecisionMode::Extended && digits < 30) {
    throw Error(ErrorKind::InvalidArgument, "extended precision needs at least 30 digits");
  }
  if (tail.kind == TailPolicy::Kind::AsymptoticRate && !(tail.base >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "asymptotic tail base must be non-negative");
  }
}

std::complex<double> value_of(const SeriesOutcome& o) { return num::to_std(o.value); }

namespace {

template <class T>
double mag_d(const Complex<T>& z) {
  return num::to_double(num::abs(z));
}

// Remainder bound after the term with index k and magnitude m.
double tail_bound(const TailPolicy& tail, long k, double m, double prev_m, bool alternating) {
  if (m == 0.0 && prev_m == 0.0) return 0.0;
  double rho;
  if (tail.kind == TailPolicy::Kind::AsymptoticRate) {
    const double l = static_cast<double>(std::max<long>(k, 1));
    rho = tail.base * std::pow((l + 1.0) / l, tail.power);
  } else {
    if (prev_m == 0.0) return INFINITY;
    rho = m / prev_m;
  }
  if (alternating) return m * rho;
  if (rho >= 1.0) return INFINITY;
  return m * rho / (1.0 - rho);
}

}  // namespace

template <class T>
BasicSeriesOutcome<T> sum_series_t(const std::function<Complex<T>(long)>& term,
                                   const SeriesOptions& opts) {
  opts.validate();
  BasicSeriesOutcome<T> out;
  out.digits = num::digits<T>();
  detail::Accumulator<T> acc;
  T sum_abs(0);
  int small = 0;
  int zeros = 0;              // consecutive exactly-zero terms
  double last_nz = 0.0;       // magnitude of the latest non-zero term
  double prev_nz = 0.0;       // and of the one before it
  Complex<T> last_nz_term;
  bool alternating = false;
  const long limit = opts.fixed_terms > 0 ? opts.fixed_terms : opts.max_terms;

  auto finish = [&](long n, double tail) {
    out.value = acc.value();
    out.n_terms = n;
    out.tail_estimate = tail;
    out.condition_number = detail::ratio_to_double(sum_abs, num::abs(out.value));
  };

  for (long k = 0; k < limit; ++k) {
    Complex<T> t = term(k);
    if (!num::isfinite(t)) {
      throw Error(ErrorKind::InvalidArgument, "series term " + std::to_string(k) + " is not finite");
    }
    acc.add(t);
    T at = num::abs(t);
    sum_abs += at;
    const double m = num::to_double(at);
    out.max_term_mag = std::max(out.max_term_mag, m);
    if (opts.keep_log) out.terms_log.push_back(m);
    zeros = m == 0.0 ? zeros + 1 : 0;
    if (m != 0.0) {
      if (last_nz != 0.0) {
        const T dot = t.re * last_nz_term.re + t.im * last_nz_term.im;
        alternating = dot < T(0);
      }
      prev_nz = last_nz;
      last_nz = m;
      last_nz_term = t;
    }
    if (opts.fixed_terms > 0 || k + 1 < opts.min_terms) continue;
    const double s = mag_d(acc.value());
    if (m <= opts.rel_tol * s) {
      ++small;
    } else {
      small = 0;
    }
    if (small >= 3) {
      // a run of exact zeros means the term source has terminated
      const double tail = (zeros >= 3 || last_nz == 0.0)
                              ? 0.0
                              : tail_bound(opts.tail, k, last_nz, prev_nz, alternating);
      if (tail <= opts.rel_tol * s) {
        finish(k + 1, tail);
        return out;
      }
    }
  }
  const double tail = tail_bound(opts.tail, limit - 1, last_nz, prev_nz, alternating);
  finish(limit, tail);
  if (opts.fixed_terms > 0) return out;
  if constexpr (std::is_same_v<T, double>) {
    throw SeriesNoConvergence("series did not converge within " + std::to_string(limit) + " terms",
                              out);
  } else {
    throw SeriesNoConvergence("series did not converge within " + std::to_string(limit) + " terms",
                              to_hardware(out));
  }
}

template BasicSeriesOutcome<double> sum_series_t<double>(
    const std::function<Complex<double>(long)>&, const SeriesOptions&);
template BasicSeriesOutcome<xfloat> sum_series_t<xfloat>(
    const std::function<Complex<xfloat>(long)>&, const SeriesOptions&);

SeriesOutcome to_hardware(const BasicSeriesOutcome<xfloat>& o) {
  SeriesOutcome r;
  r.value = detail::cvt<double>(o.value);
  r.n_terms = o.n_terms;
  r.max_term_mag = o.max_term_mag;
  r.condition_number = o.condition_number;
  r.tail_estimate = o.tail_estimate;
  r.terms_log = o.terms_log;
  r.digits = o.digits;
  return r;
}

SeriesOutcome sum_series(const TermFn& term, const SeriesOptions& opts) {
  opts.validate();
  if (opts.precision == PrecisionMode::Hardware) {
    return sum_series_t<double>(
        [&](long k) { return num::from_std<double>(term(k)); }, opts);
  }
  PrecisionScope scope(opts.digits);
  return to_hardware(sum_series_t<xfloat>(
      [&](long k) { return num::from_std<xfloat>(term(k)); }, opts));
}

BasicSeriesOutcome<xfloat> sum_series(const XTermFn& term, const SeriesOptions& opts) {
  opts.validate();
  return sum_series_t<xfloat>(term, opts);
}

double tail_rate_estimate(std::complex<double> mu, double r0, double r, long ell) {
  if (!(r0 >= 0.0) || !(r0 < r)) {
    throw Error(ErrorKind::GeometryViolation, "tail estimate needs 0 <= r0 < r");
  }
  if (ell < 1) throw Error(ErrorKind::InvalidArgument, "tail estimate needs ell >= 1");
  if (r0 == 0.0) return 0.0;
  const double l = static_cast<double>(ell);
  return std::exp((2.0 * mu.real() - 1.0) * std::log(l) + l * std::log(r0 / r));
}

mpq_class exact_rational_sum(const std::function<mpq_class(long)>& term, long count) {
  mpq_class s = 0;
  for (long k = 0; k < count; ++k) s += term(k);
  s.canonicalize();
  return s;
}

QuadraticSurd::QuadraticSurd(mpq_class a, mpq_class b, mpq_class d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 0) throw Error(ErrorKind::InvalidArgument, "radicand must be non-negative");
  a_.canonicalize();
  b_.canonicalize();
  d_.canonicalize();
}

void QuadraticSurd::check(const QuadraticSurd& o) const {
  if (d_ != o.d_) throw Error(ErrorKind::InvalidArgument, "mixing surds with different radicands");
}

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
  check(o);
  return {a_ + o.a_, b_ + o.b_, d_};
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const {
  check(o);
  return {a_ - o.a_, b_ - o.b_, d_};
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
  check(o);
  return {a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_};
}

QuadraticSurd QuadraticSurd::operator*(const mpq_class& s) const { return {a_ * s, b_ * s, d_}; }
QuadraticSurd QuadraticSurd::operator+(const mpq_class& s) const { return {a_ + s, b_, d_}; }
QuadraticSurd QuadraticSurd::operator-(const mpq_class& s) const { return {a_ - s, b_, d_}; }

QuadraticSurd QuadraticSurd::operator/(const mpq_class& s) const {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "division of a surd by zero");
  return {a_ / s, b_ / s, d_};
}

QuadraticSurd QuadraticSurd::operator-() const { return {-a_, -b_, d_}; }

bool QuadraticSurd::operator==(const QuadraticSurd& o) const {
  return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

double QuadraticSurd::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

}  // namespace wadd
