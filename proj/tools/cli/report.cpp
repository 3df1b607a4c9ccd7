#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace wadd::cli {

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string complex10(ComplexScalar z) {
  if (z.imag() == 0.0) return num10(z.real());
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

void JsonWriter::comma() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ << ',';
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ << '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  first_.pop_back();
  out_ << '}';
  if (first_.empty()) out_ << '\n';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  comma();
  out_ << '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  first_.pop_back();
  out_ << ']';
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  value(k);
  out_ << ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
  comma();
  out_ << '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': out_ << "\\\""; break;
      case '\\': out_ << "\\\\"; break;
      case '\n': out_ << "\\n"; break;
      case '\t': out_ << "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out_ << buf;
        } else {
          out_ << c;
        }
    }
  }
  out_ << '"';
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  if (!std::isfinite(v)) return null();
  comma();
  out_ << num17(v);
  return *this;
}

JsonWriter& JsonWriter::value(long v) {
  comma();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  comma();
  out_ << (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(ComplexScalar z) {
  begin_object();
  key("re").value(z.real());
  key("im").value(z.imag());
  return end_object();
}

JsonWriter& JsonWriter::null() {
  comma();
  out_ << "null";
  return *this;
}

namespace {

std::string params_text(const Row& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ' ';
    s += k + '=' + v;
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void side(JsonWriter& w, const Row& r, ComplexScalar v, const std::string& exact) {
  if (r.exact) {
    w.begin_object().key("exact").value(exact).key("approx").value(v.real()).end_object();
  } else {
    w.value(v);
  }
}

}  // namespace

void write_rows_json(std::ostream& out, const std::vector<Row>& rows) {
  long failures = 0;
  for (const auto& r : rows) failures += !r.pass;
  JsonWriter w(out);
  w.begin_object();
  w.key("schema").value(kVerifySchema);
  w.key("rows").begin_array();
  for (const auto& r : rows) {
    w.begin_object();
    w.key("identity_id").value(r.identity_id);
    w.key("params").begin_object();
    for (const auto& [k, v] : r.params) w.key(k).value(v);
    w.end_object();
    w.key("lhs");
    side(w, r, r.lhs, r.lhs_exact);
    w.key("rhs");
    side(w, r, r.rhs, r.rhs_exact);
    w.key("abs_err").value(r.abs_err);
    w.key("rel_err").value(r.rel_err);
    w.key("n_terms").value(r.n_terms);
    w.key("condition_number").value(r.condition_number);
    w.key("digits").value(r.digits);
    w.key("exact").value(r.exact);
    w.key("pass").value(r.pass);
    if (r.error.empty()) {
      w.key("error").null();
    } else {
      w.key("error").value(r.error);
    }
    w.end_object();
  }
  w.end_array();
  w.key("n_rows").value(static_cast<long>(rows.size()));
  w.key("n_failed").value(failures);
  w.end_object();
}

void write_rows_csv(std::ostream& out, const std::vector<Row>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.identity_id) << ',' << csv_field(params_text(r)) << ','
        << (r.exact ? r.lhs_exact : num17(r.lhs.real())) << ',' << num17(r.lhs.imag()) << ','
        << (r.exact ? r.rhs_exact : num17(r.rhs.real())) << ',' << num17(r.rhs.imag()) << ','
        << num17(r.abs_err) << ',' << num17(r.rel_err) << ',' << r.n_terms << ','
        << num17(r.condition_number) << ',' << r.digits << ',' << (r.exact ? 1 : 0) << ','
        << (r.pass ? 1 : 0) << ',' << csv_field(r.error) << '\n';
  }
}

void write_rows_table(std::ostream& out, const std::vector<Row>& rows) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-26s %-44s %-18s %-10s %7s %10s %6s  %s\n", "identity", "params",
                "lhs", "rel_err", "terms", "cond", "digits", "result");
  out << buf;
  for (const auto& r : rows) {
    const std::string lhs = r.exact ? r.lhs_exact : complex10(r.lhs);
    std::snprintf(buf, sizeof buf, "%-26s %-44s %-18s %-10.3g %7ld %10.3g %6d  %s\n",
                  r.identity_id.c_str(), params_text(r).c_str(), lhs.c_str(), r.rel_err,
                  r.n_terms, r.condition_number, r.digits,
                  r.pass ? "pass" : (r.error.empty() ? "FAIL" : ("ERROR " + r.error).c_str()));
    out << buf;
  }
}

void write_summary(std::ostream& out, const std::vector<Row>& rows) {
  long failures = 0;
  double worst = 0.0;
  for (const auto& r : rows) {
    failures += !r.pass;
    if (r.error.empty() && !r.exact) worst = std::max(worst, r.rel_err);
  }
  out << rows.size() << " rows, " << failures << " failed, worst rel_err " << num10(worst)
      << '\n';
  int shown = 0;
  for (const auto& r : rows) {
    if (r.pass || shown++ >= 5) continue;
    out << "  failed: " << r.identity_id << ' ' << params_text(r) << "  rel_err "
        << num10(r.rel_err) << (r.error.empty() ? "" : "  " + r.error) << '\n';
  }
}

}  // namespace wadd::cli
