#include "golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace golden {

using nlohmann::json;

json encode(const wadd::XComplex& z, int digits) {
  return json{{"re", z.re.str(digits)}, {"im", z.im.str(digits)}};
}

json encode(const mpq_class& q) { return json{{"exact", q.get_str()}}; }

bool is_exact(const json& v) { return v.is_object() && v.contains("exact"); }

wadd::XComplex decode_x(const json& v) {
  if (is_exact(v)) {
    const mpq_class q = decode_exact(v);
    wadd::xfloat x(0);
    mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDN);
    return {x, wadd::xfloat(0)};
  }
  return {wadd::xfloat(v.at("re").get<std::string>()),
          wadd::xfloat(v.at("im").get<std::string>())};
}

std::complex<double> decode(const json& v) {
  const wadd::XComplex z = decode_x(v);
  return {z.re.to_double(), z.im.to_double()};
}

mpq_class decode_exact(const json& v) {
  mpq_class q(v.at("exact").get<std::string>());
  q.canonicalize();
  return q;
}

json to_json(const std::vector<Record>& records) {
  json arr = json::array();
  for (const Record& r : records) {
    arr.push_back(json{{"identity_id", r.identity_id},
                       {"params", r.params},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"digits", r.digits},
                       {"tol", r.tol}});
  }
  return json{{"schema", kSchema}, {"records", arr}};
}

std::vector<Record> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path);
  json doc = json::parse(in);
  if (doc.value("schema", "") != kSchema) {
    throw std::runtime_error("golden file " + path + " does not declare schema " + kSchema);
  }
  std::vector<Record> out;
  for (const json& j : doc.at("records")) {
    Record r;
    r.identity_id = j.at("identity_id").get<std::string>();
    r.params = j.at("params");
    r.lhs = j.at("lhs");
    r.rhs = j.at("rhs");
    r.digits = j.at("digits").get<int>();
    r.tol = j.at("tol").get<double>();
    out.push_back(std::move(r));
  }
  return out;
}

void save(const std::string& path, const std::vector<Record>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write golden file " + path);
  out << to_json(records).dump(2) << '\n';
}

double real_param(const Record& r, const char* name) { return r.params.at(name).get<double>(); }

std::complex<double> complex_param(const Record& r, const char* name) {
  const json& v = r.params.at(name);
  if (v.is_array()) return {v.at(0).get<double>(), v.at(1).get<double>()};
  return {v.get<double>(), 0.0};
}

mpq_class rational_param(const Record& r, const char* name) {
  const json& v = r.params.at(name);
  mpq_class q;
  if (v.is_string()) {
    q = mpq_class(v.get<std::string>());
  } else if (v.is_number_integer()) {
    q = v.get<long>();
  } else {
    q = v.get<double>();  // exact binary value
  }
  q.canonicalize();
  return q;
}

}  // namespace golden
