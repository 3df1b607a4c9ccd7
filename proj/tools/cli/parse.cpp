#include <cmath>
#include <cstdlib>
#include <numbers>
#include <regex>

#include "cli.hpp"

namespace wadd::cli {

namespace {

double to_double(const std::string& s, const std::string& whole) {
  if (s.empty()) throw UsageError("not a number: '" + whole + "'");
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + whole + "'");
  }
  if (pos != s.size() || !std::isfinite(v)) throw UsageError("not a number: '" + whole + "'");
  return v;
}

}  // namespace

ComplexScalar parse_complex(const std::string& s) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?\s*$)");
  static const std::regex pure(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, pure)) {
    const double im = m[2].matched ? to_double(m[2], s) : 1.0;
    return {0.0, m[1] == "-" ? -im : im};
  }
  if (!std::regex_match(s, m, re) || (!m[1].matched && !m[2].matched)) {
    throw UsageError("not a complex number: '" + s + "'");
  }
  const double re_part = m[1].matched ? to_double(m[1], s) : 0.0;
  double im = 0.0;
  if (m[2].matched) {
    im = m[3].matched ? to_double(m[3], s) : 1.0;
    if (m[2] == "-") im = -im;
  }
  return {re_part, im};
}

double parse_real(const std::string& s) {
  // multiples of pi: "pi", "-pi/2", "2pi/3", "0.5*pi"
  static const std::regex angle(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)?)\*?pi(?:/(\d+\.?\d*))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, angle)) {
    const std::string c = m[1];
    double v = std::numbers::pi;
    if (c == "-") v = -v;
    else if (!c.empty() && c != "+") v *= to_double(c, s);
    if (m[2].matched) v /= to_double(m[2], s);
    return v;
  }
  const ComplexScalar z = parse_complex(s);
  if (z.imag() != 0.0) throw UsageError("expected a real number: '" + s + "'");
  return z.real();
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (pos != s.size() || v < -1000000 || v > 1000000) {
    throw UsageError("not an integer: '" + s + "'");
  }
  return static_cast<int>(v);
}

mpq_class parse_rational(const std::string& s) {
  static const std::regex frac(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex dec(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, frac)) {
    mpz_class num(m[1].str()), den(m[2].str());
    if (den == 0) throw UsageError("zero denominator: '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(s, m, dec) && (m[2].length() + m[3].length()) > 0) {
    const std::string digits = m[2].str() + m[3].str();
    mpz_class den = 1;
    for (std::size_t i = 0; i < m[3].str().size(); ++i) den *= 10;
    mpq_class q(mpz_class(digits), den);
    q.canonicalize();
    return m[1] == "-" ? mpq_class(-q) : q;
  }
  throw UsageError("not a rational number: '" + s + "'");
}

SphericalPoint parse_point(const std::string& s) {
  const auto parts = split_list(s);
  if (parts.size() != 3) throw UsageError("a point is r,theta,phi: '" + s + "'");
  return {parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  for (const auto& v : out) {
    if (v.empty()) throw UsageError("empty entry in list '" + s + "'");
  }
  return out;
}

int default_digits() {
  const char* env = std::getenv("WADD_DIGITS");
  if (env == nullptr || *env == '\0') return 60;
  int d = 0;
  try {
    d = parse_int(env);
  } catch (const UsageError&) {
    throw UsageError(std::string("WADD_DIGITS is not an integer: '") + env + "'");
  }
  if (d < 30) throw UsageError("WADD_DIGITS must be at least 30");
  return d;
}

}  // namespace wadd::cli
