#pragma once

#include <gmpxx.h>

#include <complex>
#include <functional>
#include <vector>

#include "wadd/complex.hpp"
#include "wadd/error.hpp"

namespace wadd {

enum class PrecisionMode { Hardware, Extended };

struct TailPolicy {
  enum class Kind { RatioTest, AsymptoticRate };
  Kind kind = Kind::RatioTest;
  /// For AsymptoticRate: |t_{l+1}/t_l| ~ base * ((l+1)/l)^power.
  double base = 0.0;
  double power = 0.0;

  static TailPolicy ratio_test() { return {}; }
  static TailPolicy asymptotic_rate(double base, double power) {
    return {Kind::AsymptoticRate, base, power};
  }
};

struct SeriesOptions {
  double rel_tol = 1e-15;
  long max_terms = 10000;
  /// Terms always summed before the stopping rule is consulted.
  long min_terms = 1;
  /// If positive, sum exactly this many terms and only estimate the tail.
  long fixed_terms = 0;
  PrecisionMode precision = PrecisionMode::Hardware;
  /// Digits used when precision is Extended.
  int digits = 60;
  TailPolicy tail;
  /// Record |t_l| for every term.
  bool keep_log = false;

  /// Throws InvalidArgument unless rel_tol > 0, max_terms >= 1 and, for
  /// extended precision, digits >= 30.
  void validate() const;
};

template <class T>
struct BasicSeriesOutcome {
  Complex<T> value;
  long n_terms = 0;
  double max_term_mag = 0.0;
  /// sum |t_l| / |sum t_l|, at least 1 (infinite for an exactly zero sum).
  double condition_number = 1.0;
  double tail_estimate = 0.0;
  std::vector<double> terms_log;
  int digits = 16;
};

using SeriesOutcome = BasicSeriesOutcome<double>;

std::complex<double> value_of(const SeriesOutcome& o);

/// Thrown when max_terms is reached; carries what had been accumulated.
class SeriesNoConvergence : public Error {
 public:
  SeriesNoConvergence(const std::string& what, SeriesOutcome partial)
      : Error(ErrorKind::NoConvergence, what), partial_(std::move(partial)) {}
  const SeriesOutcome& partial() const noexcept { return partial_; }

 private:
  SeriesOutcome partial_;
};

using TermFn = std::function<std::complex<double>(long)>;
using XTermFn = std::function<XComplex(long)>;

/// Sums t_0, t_1, ... sequentially with compensated accumulation (or in
/// extended precision when requested). Stops once three consecutive terms are
/// below rel_tol * |partial sum| and the tail policy bounds the remainder by
/// the same amount.
SeriesOutcome sum_series(const TermFn& term, const SeriesOptions& opts = {});

/// Same engine over extended-precision terms, accumulated at working precision.
BasicSeriesOutcome<xfloat> sum_series(const XTermFn& term, const SeriesOptions& opts = {});

/// Generic engine; instantiated for double and xfloat.
template <class T>
BasicSeriesOutcome<T> sum_series_t(const std::function<Complex<T>(long)>& term,
                                   const SeriesOptions& opts);

SeriesOutcome to_hardware(const BasicSeriesOutcome<xfloat>& o);

/// Leading-order magnitude l^{2 Re mu - 1} (r0/r)^l of the terms of the
/// generalized addition series, used to forecast truncation.
double tail_rate_estimate(std::complex<double> mu, double r0, double r, long ell);

/// Exact sum of term(0) .. term(count - 1).
mpq_class exact_rational_sum(const std::function<mpq_class(long)>& term, long count);

/// a + b sqrt(d) with rational a, b and a fixed rational radicand d >= 0.
class QuadraticSurd {
 public:
  QuadraticSurd(mpq_class a, mpq_class b, mpq_class d);
  static QuadraticSurd rational(const mpq_class& a, const mpq_class& d) { return {a, 0, d}; }
  static QuadraticSurd root(const mpq_class& d) { return {0, 1, d}; }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& d() const { return d_; }

  QuadraticSurd operator+(const QuadraticSurd& o) const;
  QuadraticSurd operator-(const QuadraticSurd& o) const;
  QuadraticSurd operator*(const QuadraticSurd& o) const;
  QuadraticSurd operator*(const mpq_class& s) const;
  QuadraticSurd operator+(const mpq_class& s) const;
  QuadraticSurd operator-(const mpq_class& s) const;
  QuadraticSurd operator/(const mpq_class& s) const;
  QuadraticSurd operator-() const;
  bool operator==(const QuadraticSurd& o) const;

  double to_double() const;

 private:
  void check(const QuadraticSurd& o) const;
  mpq_class a_;
  mpq_class b_;
  mpq_class d_;
};

}  // namespace wadd
