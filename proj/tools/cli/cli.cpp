#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <thread>

#include "report.hpp"
#include "wadd/error.hpp"
#include "wadd/polynomials.hpp"
#include "wadd/special.hpp"

namespace wadd::cli {

namespace {

// Named --options of `eval`; each function picks the ones it needs.
class EvalArgs {
 public:
  void attach(CLI::App& app) {
    for (const char* n : {"kappa", "mu", "r", "z", "a", "b", "l", "m", "n", "x", "nu", "alpha",
                          "g", "k", "p", "p0", "method"}) {
      opts_[n] = app.add_option(std::string("--") + n, vals_[n]);
    }
  }
  const std::string& need(const std::string& fn, const std::string& n) const {
    if (opts_.at(n)->count() == 0) throw UsageError(fn + " requires --" + n);
    return vals_.at(n);
  }
  bool has(const std::string& n) const { return opts_.at(n)->count() > 0; }

 private:
  std::map<std::string, std::string> vals_;
  std::map<std::string, CLI::Option*> opts_;
};

struct EvalResult {
  ComplexScalar value;
  bool complex = false;
  long n_terms = 1;
  double condition_number = 1.0;
  int digits = 16;
  std::vector<std::pair<std::string, std::string>> params;
};

EvalResult from(const Evaluation& e) {
  return {e.value, true, e.n_terms, e.condition_number, e.digits, {}};
}

EvalResult real_result(double v, long n_terms = 1) { return {v, false, n_terms, 1.0, 16, {}}; }

// Canonical order of a symmetric kernel's arguments, so that swapping the
// points reproduces the output exactly.
std::pair<SphericalPoint, SphericalPoint> ordered(SphericalPoint a, SphericalPoint b) {
  const auto key = [](const SphericalPoint& p) { return std::tuple(p.r, p.theta, p.phi); };
  if (key(b) < key(a)) std::swap(a, b);
  return {a, b};
}

EvalResult evaluate(const std::string& fn, const EvalArgs& a, bool deriv) {
  std::vector<std::pair<std::string, std::string>> used;
  auto get = [&](const std::string& n) -> const std::string& {
    const std::string& v = a.need(fn, n);
    used.emplace_back(n, v);
    return v;
  };
  EvalResult res;
  if (fn == "whittaker_m" || fn == "whittaker_w") {
    const WhittakerOrder o{parse_complex(get("kappa")), parse_complex(get("mu"))};
    const double r = parse_real(get("r"));
    res = from(fn == "whittaker_m" ? whittaker_m_eval(o, r, deriv) : whittaker_w_eval(o, r, deriv));
  } else if (fn == "kummer_m") {
    res = from(kummer_m_eval(parse_complex(get("a")), parse_complex(get("b")),
                             parse_complex(get("z"))));
  } else if (fn == "kummer_u") {
    res = from(kummer_u_eval(parse_complex(get("a")), parse_complex(get("b")),
                             parse_real(get("z"))));
  } else if (fn == "gamma") {
    res = {gamma(parse_complex(get("z"))), true, 1, 1.0, 16, {}};
  } else if (fn == "legendre") {
    const int l = parse_int(get("l"));
    const double x = parse_real(get("x"));
    if (a.has("m")) {
      res = real_result(legendre_p(l, parse_int(get("m")), x), l + 1);
    } else {
      res = real_result(legendre_p(l, x), l + 1);
    }
  } else if (fn == "gegenbauer") {
    const int l = parse_int(get("l"));
    res = real_result(gegenbauer_checked(l, parse_real(get("nu")), parse_real(get("x"))), l + 1);
  } else if (fn == "laguerre") {
    const int n = parse_int(get("n"));
    res = real_result(laguerre_checked(n, parse_real(get("alpha")), parse_real(get("x"))), n + 1);
  } else if (fn == "bessel_i" || fn == "bessel_k") {
    res = real_result(bessel_modified(parse_real(get("nu")), parse_real(get("x")),
                                      fn == "bessel_i" ? BesselKind::I : BesselKind::K));
  } else if (fn == "hostler" || fn == "partial_wave") {
    const CoulombParams cp{parse_real(get("g")), parse_real(get("k"))};
    const auto [p, p0] = ordered(parse_point(get("p")), parse_point(get("p0")));
    if (fn == "hostler") {
      res = real_result(hostler_green(cp, p, p0));
    } else {
      const auto pw = partial_wave_green(cp, p, p0);
      res = real_result(pw.value, pw.diag.n_terms);
      res.condition_number = pw.diag.condition_number;
    }
  } else if (fn == "free") {
    const auto [p, p0] = ordered(parse_point(get("p")), parse_point(get("p0")));
    res = real_result(free_green(parse_real(get("k")), p, p0));
  } else if (fn == "projection") {
    const int n = parse_int(get("n"));
    const auto [p, p0] = ordered(parse_point(get("p")), parse_point(get("p0")));
    ProjectionMethod m = ProjectionMethod::EigenSum;
    if (a.has("method")) {
      const std::string& s = get("method");
      if (s == "residue") {
        m = ProjectionMethod::Residue;
      } else if (s != "eigen") {
        throw UsageError("--method is 'eigen' or 'residue'");
      }
    }
    res = real_result(projection_kernel(n, parse_real(get("g")), p, p0, m));
  } else {
    throw UsageError("unknown function '" + fn +
                     "' (whittaker_m, whittaker_w, kummer_m, kummer_u, gamma, legendre, "
                     "gegenbauer, laguerre, bessel_i, bessel_k, hostler, partial_wave, free, "
                     "projection)");
  }
  res.params = std::move(used);
  return res;
}

void print_eval(std::ostream& out, const std::string& fn, const EvalResult& r, bool json) {
  if (json) {
    JsonWriter w(out);
    w.begin_object().key("schema").value(kEvalSchema).key("function").value(fn);
    w.key("params").begin_object();
    for (const auto& [k, v] : r.params) w.key(k).value(v);
    w.end_object();
    w.key("value");
    if (r.complex) {
      w.value(r.value);
    } else {
      w.value(r.value.real());
    }
    w.key("n_terms").value(r.n_terms);
    w.key("condition_number").value(r.condition_number);
    w.key("digits").value(r.digits);
    w.end_object();
    return;
  }
  out << complex10(r.value) << '\n'
      << "n_terms " << r.n_terms << '\n'
      << "condition_number " << num10(r.condition_number) << '\n';
}

struct GreenRow {
  double hostler = 0.0;
  double free = 0.0;
  std::optional<PartialWaveResult> pw;
};

void print_green(std::ostream& out, const CoulombParams& cp, const GreenRow& g, bool json) {
  const double residual =
      g.pw ? std::abs(g.pw->value - g.hostler) / std::abs(g.hostler) : 0.0;
  if (json) {
    JsonWriter w(out);
    w.begin_object().key("schema").value(kGreenSchema);
    w.key("g").value(cp.g).key("k").value(cp.k).key("kappa").value(cp.kappa());
    w.key("hostler").value(g.hostler);
    w.key("free").value(g.free);
    if (g.pw) {
      w.key("partial_wave").value(g.pw->value);
      w.key("lmax").value(g.pw->diag.n_terms - 1);
      w.key("residual").value(residual);
    }
    w.end_object();
    return;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-16s %-18s\n", "hostler", num10(g.hostler).c_str());
  out << buf;
  if (g.pw) {
    std::snprintf(buf, sizeof buf, "%-16s %-18s\n%-16s %ld\n%-16s %s\n", "partial_wave",
                  num10(g.pw->value).c_str(), "lmax", g.pw->diag.n_terms - 1, "residual",
                  num10(residual).c_str());
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "%-16s %-18s\n", "free", num10(g.free).c_str());
  out << buf;
}

int library_error(std::ostream& err, const Error& e) {
  err << "error: " << e.what() << '\n';
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Whittaker addition theorems: evaluation, identity sweeps and Green's functions",
               "wadd"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one function and print diagnostics");
  std::string fn;
  eval->add_option("function", fn, "Function name")->required();
  EvalArgs eargs;
  eargs.attach(*eval);
  bool deriv = false;
  eval->add_flag("--deriv", deriv, "Derivative with respect to r (Whittaker functions)");
  std::string eval_format = "table";
  eval->add_option("--format", eval_format)->check(CLI::IsMember({"table", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Sweep an identity over a parameter grid");
  std::string identity;
  verify->add_option("identity", identity, "Identity id");
  std::string preset_name;
  verify->add_option("--preset", preset_name, "acceptance | remark53");
  std::vector<std::string> grid;
  verify->add_option("--grid", grid, "name=v1,v2,... (integers also a..b)");
  std::optional<double> threshold;
  verify->add_option("--threshold", threshold, "Relative error threshold");
  std::string format = "table";
  verify->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  std::string output;
  verify->add_option("--output", output, "Write the report here and print a summary");
  SweepOptions sweep;
  verify->add_option("--rel-tol", sweep.rel_tol);
  verify->add_option("--max-terms", sweep.max_terms);
  int digits = 0;
  verify->add_option("--digits", digits, "Extended precision digits (default $WADD_DIGITS or 60)");
  sweep.threads = std::max(1u, std::thread::hardware_concurrency());
  verify->add_option("--threads", sweep.threads);
  bool list = false;
  verify->add_flag("--list", list, "List identities and their parameters");

  // green
  auto* green = app.add_subcommand("green", "Coulomb Green's function by both methods");
  std::string gs, ks, ps, p0s;
  green->add_option("--g", gs)->required();
  green->add_option("--k", ks)->required();
  green->add_option("--p", ps, "r,theta,phi")->required();
  green->add_option("--p0", p0s, "r,theta,phi")->required();
  bool compare = false;
  green->add_flag("--compare", compare, "Also sum the partial-wave series");
  std::string green_format = "table";
  green->add_option("--format", green_format)->check(CLI::IsMember({"table", "json"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (eval->parsed()) {
      const EvalResult r = evaluate(fn, eargs, deriv);
      print_eval(out, fn, r, eval_format == "json");
      return kPass;
    }

    if (green->parsed()) {
      const CoulombParams cp{parse_real(gs), parse_real(ks)};
      const auto [p, p0] = ordered(parse_point(ps), parse_point(p0s));
      GreenRow row;
      row.hostler = hostler_green(cp, p, p0);
      row.free = free_green(cp.k, p, p0);
      if (compare) row.pw = partial_wave_green(cp, p, p0);
      print_green(out, cp, row, green_format == "json");
      return kPass;
    }

    // verify
    if (list) {
      for (const auto& id : identity_ids()) {
        out << id;
        for (const auto& p : identity_params(id)) out << ' ' << p;
        out << '\n';
      }
      return kPass;
    }
    sweep.digits = digits > 0 ? digits : default_digits();
    if (sweep.digits < 30) throw UsageError("--digits must be at least 30");
    if (identity.empty() == preset_name.empty()) {
      throw UsageError("give either an identity or --preset");
    }
    std::vector<Row> rows;
    if (preset_name == "remark53") {
      if (!grid.empty()) throw UsageError("--grid does not apply to --preset remark53");
      rows = remark53_rows(sweep.digits);
    } else {
      std::vector<SweepSpec> specs;
      if (!preset_name.empty()) {
        if (!grid.empty()) throw UsageError("--grid does not apply to presets");
        specs = preset(preset_name);
        if (threshold) {
          for (auto& s : specs) s.threshold = threshold;
        }
      } else {
        SweepSpec s{identity, {}, threshold};
        for (const auto& g : grid) {
          const auto eq = g.find('=');
          if (eq == std::string::npos || eq == 0 || eq + 1 == g.size()) {
            throw UsageError("--grid expects name=values, got '" + g + "'");
          }
          s.grid[g.substr(0, eq)].push_back(g.substr(eq + 1));
        }
        specs.push_back(std::move(s));
      }
      for (const auto& s : specs) {
        auto part = run_sweep(s, sweep);
        rows.insert(rows.end(), part.begin(), part.end());
      }
    }

    auto write = [&](std::ostream& o) {
      if (format == "json") {
        write_rows_json(o, rows);
      } else if (format == "csv") {
        write_rows_csv(o, rows);
      } else {
        write_rows_table(o, rows);
      }
    };
    if (!output.empty()) {
      std::ofstream f(output);
      if (!f) throw UsageError("cannot write '" + output + "'");
      write(f);
      write_summary(out, rows);
    } else {
      write(out);
      if (format == "table") write_summary(out, rows);
    }
    for (const auto& r : rows) {
      if (!r.pass) return kFail;
    }
    return kPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    return library_error(err, e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace wadd::cli
