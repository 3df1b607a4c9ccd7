#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli.hpp"

namespace wadd::cli {

/// Minimal streaming JSON writer; doubles use 17 significant digits and
/// non-finite values become null.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(const std::string& s);
  JsonWriter& value(const char* s) { return value(std::string(s)); }
  JsonWriter& value(double v);
  JsonWriter& value(long v);
  JsonWriter& value(int v) { return value(static_cast<long>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(ComplexScalar z);
  JsonWriter& null();

 private:
  void comma();
  std::ostream& out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

std::string num17(double v);
std::string num10(double v);
std::string complex10(ComplexScalar z);

inline constexpr const char* kVerifySchema = "wadd.verify/1";
inline constexpr const char* kEvalSchema = "wadd.eval/1";
inline constexpr const char* kGreenSchema = "wadd.green/1";

/// CSV header of verify reports; the column order is part of the format.
inline constexpr const char* kCsvHeader =
    "identity_id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,n_terms,"
    "condition_number,digits,exact,pass,error";

void write_rows_json(std::ostream& out, const std::vector<Row>& rows);
void write_rows_csv(std::ostream& out, const std::vector<Row>& rows);
void write_rows_table(std::ostream& out, const std::vector<Row>& rows);
/// "N rows, F failed" plus the first failures.
void write_summary(std::ostream& out, const std::vector<Row>& rows);

}  // namespace wadd::cli
