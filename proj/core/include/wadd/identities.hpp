#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "wadd/special.hpp"
#include "wadd/summation.hpp"

namespace wadd {

/// Two radial points at angle gamma together with the derived distances
/// R = |r - r0|, x = r + r0 + R and y = r + r0 - R.
struct GeometryConfig {
  double r = 0.0;
  double r0 = 0.0;
  double gamma = 0.0;
  double R = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Builds the geometry with cancellation-free formulas:
/// R^2 = (r - r0)^2 + 4 r r0 sin^2(gamma/2) and y = 4 r r0 cos^2(gamma/2) / x.
GeometryConfig geometry_from(double r, double r0, double gamma);

inline constexpr double kRelErrFloor = 1e-300;

struct IdentityReport {
  std::string identity_id;
  ComplexScalar lhs;
  ComplexScalar rhs;
  double abs_err = 0.0;
  /// abs_err / max(|lhs|, |rhs|, kRelErrFloor).
  double rel_err = 0.0;
  SeriesOutcome lhs_diag;
  std::optional<SeriesOutcome> rhs_diag;
};

IdentityReport make_report(std::string id, ComplexScalar lhs, ComplexScalar rhs,
                           SeriesOutcome lhs_diag,
                           std::optional<SeriesOutcome> rhs_diag = std::nullopt);

/// Result of a verification done in exact rational arithmetic.
struct ExactReport {
  std::string identity_id;
  mpq_class lhs;
  mpq_class rhs;
  mpq_class residual;
  bool exact = false;
};

struct VerifyOptions {
  SeriesOptions series;
  /// Minimum distance of kappa from {1, 2, ...} where Gamma(1 - kappa) has poles.
  double kappa_guard = 1e-3;
  /// Evaluate the confluent limit of the symmetric Laguerre identity at u = v.
  bool allow_confluent = false;
};

// Whittaker addition theorem and its special cases.

IdentityReport verify_whittaker_addition(ComplexScalar kappa, const GeometryConfig& geo,
                                         const VerifyOptions& opts = {});
/// kappa = n limit of the addition theorem; only n = 1 is available.
IdentityReport verify_kappa_integer_limit(int n, const GeometryConfig& geo,
                                          const VerifyOptions& opts = {});
IdentityReport verify_gamma_zero(ComplexScalar kappa, double r0, double r,
                                 const VerifyOptions& opts = {});
IdentityReport verify_gamma_pi(ComplexScalar kappa, double r0, double r,
                               const VerifyOptions& opts = {});
IdentityReport verify_m_exp_sum(ComplexScalar kappa, ComplexScalar z,
                                const VerifyOptions& opts = {});

// Classical addition theorems.

IdentityReport verify_graf_2d(double k, double r0, double r, double phi,
                              const VerifyOptions& opts = {});
IdentityReport verify_gegenbauer_addition(double nu, double r0, double r, double gamma,
                                          const VerifyOptions& opts = {});
IdentityReport verify_spherical_addition(int l, double theta, double phi, double theta0,
                                         double phi0);

// Laguerre identities.

IdentityReport verify_laguerre_addition(int n, const GeometryConfig& geo);
/// Rational r, r0 and cos(gamma); R may be irrational and is carried as a
/// quadratic surd.
ExactReport verify_laguerre_addition_exact(int n, const mpq_class& r, const mpq_class& r0,
                                           const mpq_class& cos_gamma);

enum class LaguerreVariant { Interior, Pi };

IdentityReport verify_laguerre_symmetric(int n, ComplexScalar u, ComplexScalar v,
                                         LaguerreVariant variant,
                                         const VerifyOptions& opts = {});
ExactReport verify_laguerre_symmetric_exact(int n, const mpq_class& u, const mpq_class& v,
                                            LaguerreVariant variant,
                                            bool allow_confluent = false);

// Generalized summation and addition formulas.

IdentityReport verify_w_downward_sum(int n, ComplexScalar kappa, ComplexScalar mu, double r);

/// Generalized addition formula with index shift mu. Runs at hardware
/// precision first and repeats the left-hand side in extended precision when
/// the condition number of the series forecasts loss of the requested
/// accuracy. rhs_diag->digits reports the precision finally used.
IdentityReport verify_pi_addition_general(ComplexScalar kappa, ComplexScalar mu, double r0,
                                          double r, const VerifyOptions& opts = {});

/// Normalized terms t_l = |term_l| / |rhs| of the generalized addition
/// series, so that sum (-1)^l t_l = 1.
struct PiAdditionTerms {
  std::vector<double> t;
  double final_sum = 0.0;
  double rel_err = 0.0;
  double condition_number = 1.0;
  int digits = 0;
  long n_terms = 0;
};

/// Full term listing at `digits` working digits (at least 30). Real
/// parameters only. `min_terms` forces at least that many terms.
PiAdditionTerms pi_addition_terms(double kappa, double mu, double r0, double r, int digits,
                                  long min_terms = 0);

/// Surrogate t_l with both Whittaker factors replaced by their large-mu
/// leading terms; W_{kappa,mu}(r + r0) stays exact.
double pi_addition_surrogate_term(double kappa, double mu, double r0, double r, long ell);

/// First l with surrogate t_l < threshold, searching up to max_ell.
long pi_addition_surrogate_first_below(double kappa, double mu, double r0, double r,
                                       double threshold, long max_ell = 100000);

IdentityReport verify_m_gegenbauer_sum(ComplexScalar kappa, double mu, ComplexScalar z,
                                       double gamma, const VerifyOptions& opts = {});

// Exact binomial identities.

ExactReport verify_lemma_binomial(int N, const mpq_class& nu);
/// sum (-1)^l C(n,l) (2mu+2l) / (2mu+l)_{n+1} = delta_{n,0}.
ExactReport verify_delta_corollary(int n, const mpq_class& mu);

}  // namespace wadd
