#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wadd/complex.hpp"
#include "wadd/green.hpp"

namespace wadd::cli {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Thrown for malformed input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Value syntax shared by all subcommands.

/// "1.5", "-2", "0.3+0.4i", "2i", "1e-3-2.5e-1i".
ComplexScalar parse_complex(const std::string& s);
double parse_real(const std::string& s);
int parse_int(const std::string& s);
/// "p/q", an integer, or a finite decimal such as "3.2" (read exactly).
mpq_class parse_rational(const std::string& s);
/// "r,theta,phi".
SphericalPoint parse_point(const std::string& s);
/// Comma separated list; complex values keep their sign syntax.
std::vector<std::string> split_list(const std::string& s);

/// Precision used when nothing else is given: $WADD_DIGITS or 60.
int default_digits();

// Identity sweeps.

struct Row {
  std::string identity_id;
  std::vector<std::pair<std::string, std::string>> params;
  bool exact = false;
  ComplexScalar lhs;
  ComplexScalar rhs;
  std::string lhs_exact;
  std::string rhs_exact;
  double abs_err = 0.0;
  double rel_err = 0.0;
  long n_terms = 0;
  double condition_number = 1.0;
  int digits = 16;
  bool pass = false;
  std::string error;
};

struct SweepSpec {
  std::string identity_id;
  /// Parameter name to list of values; unspecified parameters take the
  /// identity's default grid.
  std::map<std::string, std::vector<std::string>> grid;
  std::optional<double> threshold;
};

struct SweepOptions {
  double rel_tol = 1e-15;
  long max_terms = 10000;
  int digits = 60;
  unsigned threads = 1;
};

/// Identity ids accepted by `verify`.
std::vector<std::string> identity_ids();
/// Parameter names of an identity in grid order.
std::vector<std::string> identity_params(const std::string& id);

/// Expands and evaluates a sweep. Throws UsageError for an unknown identity
/// or parameter, an empty grid or an unparsable value. Rows come back in grid
/// order regardless of the number of threads.
std::vector<Row> run_sweep(const SweepSpec& spec, const SweepOptions& opts);

/// Sweeps of a named preset; throws UsageError for unknown names. The
/// remark53 preset is not a grid and is served by remark53_rows.
std::vector<SweepSpec> preset(const std::string& name);

/// Stress case kappa = 1, mu = 20, r0 = 1, r = 2 at `digits` working digits:
/// rows for t_0 and t_145 against the published values (agreement to 6
/// significant figures), the alternating sum against 1, and the first l
/// with surrogate t_l < 0.1 against 168.
std::vector<Row> remark53_rows(int digits);

}  // namespace wadd::cli
