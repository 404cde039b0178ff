#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "curve_spec.hpp"
#include "mulint/branch.hpp"
#include "mulint/integrate.hpp"
#include "mulint/starcalc.hpp"
#include "mulint/verify.hpp"

namespace mulint::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Stage { Parse, Track, Quadrature, Evaluate, Verify };

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Parse: return "parse";
    case Stage::Track: return "track";
    case Stage::Quadrature: return "quadrature";
    case Stage::Evaluate: return "evaluate";
    case Stage::Verify: return "verify";
  }
  return "run";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::UnknownIdentifier:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidCurve:
    case ErrorKind::ParameterOutOfRange:
      return kExitUsage;
    case ErrorKind::ToleranceNotMet:
      return kExitTolerance;
    default:
      return kExitMathDomain;
  }
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--n expects lo..hi, got '" + text + "'");
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw UsageError("--n expects integers, got '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  const auto lo = parse_int(sv.substr(0, dots));
  const auto hi = parse_int(sv.substr(dots + 2));
  if (lo > hi) throw UsageError("--n window needs lo <= hi");
  return {lo, hi};
}

ConstantTable parse_constants(const std::vector<std::string>& items) {
  ConstantTable table;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--const expects name=value, got '" + item + "'");
    }
    table[item.substr(0, eq)] = parse_complex_literal(item.substr(eq + 1));
  }
  return table;
}

Json complex_json(ComplexValue v) { return Json{{"re", v.real()}, {"im", v.imag()}}; }

Json cardinality_json(const Cardinality& c) {
  switch (c.kind) {
    case Cardinality::Kind::Single: return "single";
    case Cardinality::Kind::Finite: return Json{{"finite", c.q}};
    case Cardinality::Kind::Countable: return "countable";
  }
  return nullptr;
}

std::string number_text(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct Options {
  std::string function;
  std::vector<std::string> constants;
  std::string curve;
  std::int64_t k0 = 0;
  std::string window = "-8..8";
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 40;
  std::string format = "json";
  std::string output;
  std::string at;
  std::string diff = "ds";
  std::int64_t m = 4096;
  std::string suite = "all";
  std::uint64_t seed = kDefaultFixtureSeed;
  double tolerance = 1e-8;
};

class Runner {
 public:
  Runner(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), out_(out), err_(err) {}

  Stage stage = Stage::Parse;

  int dispatch(const std::string& sub) {
    config_.subcommand = sub;
    config_.function_source = opts_.function;
    config_.constants = parse_constants(opts_.constants);
    config_.curve_spec = opts_.curve;
    config_.k0 = BranchSelection{opts_.k0};
    std::tie(config_.n_lo, config_.n_hi) = parse_window(opts_.window);
    config_.quadrature = QuadratureSettings{opts_.abs_tol, opts_.rel_tol, opts_.max_depth};
    config_.quadrature.validate();
    if (opts_.format == "json") {
      config_.format = OutputFormat::Json;
    } else if (opts_.format == "csv") {
      config_.format = OutputFormat::Csv;
    } else {
      throw UsageError("--format must be json or csv");
    }
    if (!opts_.output.empty()) config_.output_path = opts_.output;

    if (sub == "star-deriv") return star_deriv();
    if (sub == "integrate") return integrate();
    if (sub == "line-integrate") return line_integrate();
    if (sub == "riemann") return riemann();
    if (sub == "verify") return verify();
    if (sub == "sample") return sample();
    throw UsageError("unknown subcommand " + sub);
  }

 private:
  Expr function_in(std::initializer_list<std::string> vars) const {
    if (config_.function_source.empty()) throw UsageError("--function is required");
    const std::vector<std::string> v(vars);
    return parse_expression(config_.function_source, v, config_.constants);
  }

  ParametricCurve curve() const {
    if (config_.curve_spec.empty()) throw UsageError("--curve is required");
    return parse_curve_spec(config_.curve_spec);
  }

  void emit(const std::string& text) {
    if (config_.output_path) {
      std::ofstream file(*config_.output_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file " + *config_.output_path);
      file << text;
    } else {
      out_ << text;
    }
  }

  void emit(const Json& j) { emit(j.dump(2) + "\n"); }

  int star_deriv() {
    const Expr f = function_in({"z"});
    if (opts_.at.empty()) throw UsageError("--at is required");
    const ComplexValue z = parse_complex_literal(opts_.at);
    stage = Stage::Evaluate;
    const ComplexValue value = star_derivative(f, z);
    const PolarDecomposition polar = polar_decompose(f, z);
    if (config_.format == OutputFormat::Csv) {
      emit("re,im\n" + number_text(value.real()) + "," + number_text(value.imag()) + "\n");
    } else {
      emit(Json{{"at", complex_json(z)},
                {"value", complex_json(value)},
                {"polar", Json{{"modulus", polar.modulus}, {"argument", polar.argument}}}});
    }
    return kExitOk;
  }

  int integrate() {
    const Expr f = function_in({"z"});
    const ParametricCurve c = curve();
    stage = Stage::Track;
    const LogTrack track = build_log_track(f, c, config_.k0);
    stage = Stage::Quadrature;
    const StarIntegralResult result = star_integral(track, config_.quadrature);
    const MultiValuedIntegral& I = result.integral;
    if (config_.format == OutputFormat::Csv) {
      std::string text = "n,re,im\n";
      for (std::int64_t n = config_.n_lo; n <= config_.n_hi; ++n) {
        const ComplexValue v = I.value(n);
        text += std::to_string(n) + "," + number_text(v.real()) + "," + number_text(v.imag()) + "\n";
      }
      emit(text);
      return kExitOk;
    }
    Json values = Json::array();
    for (std::int64_t n = config_.n_lo; n <= config_.n_hi; ++n) {
      const ComplexValue v = I.value(n);
      values.push_back(Json{{"n", n}, {"re", v.real()}, {"im", v.imag()}});
    }
    emit(Json{{"principal", complex_json(I.principal())},
              {"delta", complex_json(I.delta())},
              {"cardinality", cardinality_json(I.cardinality())},
              {"values", values},
              {"quadrature", Json{{"est_error", result.quadrature.est_error},
                                  {"panels", result.quadrature.panels}}}});
    return kExitOk;
  }

  int line_integrate() {
    const Expr h = function_in({"x", "y"});
    const ParametricCurve c = curve();
    Differential d;
    if (opts_.diff == "dx") {
      d = Differential::Dx;
    } else if (opts_.diff == "dy") {
      d = Differential::Dy;
    } else if (opts_.diff == "ds") {
      d = Differential::Ds;
    } else {
      throw UsageError("--diff must be dx, dy or ds");
    }
    stage = Stage::Quadrature;
    const double value = line_star_integral(h, c, d, config_.quadrature);
    if (config_.format == OutputFormat::Csv) {
      emit("value\n" + number_text(value) + "\n");
    } else {
      emit(Json{{"differential", opts_.diff}, {"value", value}});
    }
    return kExitOk;
  }

  int riemann() {
    const Expr f = function_in({"z"});
    const ParametricCurve c = curve();
    if (opts_.m < 1) throw UsageError("--m must be >= 1");
    stage = Stage::Track;
    const LogTrack track = build_log_track(f, c, config_.k0);
    stage = Stage::Quadrature;
    const ComplexValue log_p = riemann_log_sum(track, opts_.m);
    const ComplexValue p = checked_exp(log_p);
    if (config_.format == OutputFormat::Csv) {
      emit("m,re,im\n" + std::to_string(opts_.m) + "," + number_text(p.real()) + "," +
           number_text(p.imag()) + "\n");
    } else {
      emit(Json{{"m", opts_.m}, {"value", complex_json(p)}, {"log_value", complex_json(log_p)}});
    }
    return kExitOk;
  }

  int verify() {
    const std::vector<Suite> suites = parse_suites(opts_.suite);
    stage = Stage::Verify;
    Json reports = Json::array();
    bool all_passed = true;
    std::string csv = "suite,fixtures,max_residual,failures\n";
    for (Suite s : suites) {
      const PropertyReport r = run_suite(s, opts_.seed, opts_.tolerance);
      all_passed = all_passed && r.passed();
      Json failures = Json::array();
      for (const auto& [id, residual] : r.failures) {
        failures.push_back(Json{{"fixture", id},
                                {"residual", std::isfinite(residual) ? Json(residual) : Json("inf")}});
      }
      reports.push_back(Json{{"suite", r.property},
                             {"fixtures", r.fixtures_run},
                             {"tolerance", r.tolerance},
                             {"max_residual", std::isfinite(r.max_residual) ? Json(r.max_residual)
                                                                            : Json("inf")},
                             {"passed", r.passed()},
                             {"failures", failures}});
      csv += r.property + "," + std::to_string(r.fixtures_run) + "," + number_text(r.max_residual) +
             "," + std::to_string(r.failures.size()) + "\n";
    }
    if (config_.format == OutputFormat::Csv) {
      emit(csv);
    } else {
      emit(Json{{"passed", all_passed}, {"suites", reports}});
    }
    if (!all_passed) {
      err_ << "mulint: verify error: property residuals above tolerance\n";
      return kExitMathDomain;
    }
    return kExitOk;
  }

  int sample() {
    const Expr f = function_in({"z"});
    const ParametricCurve c = curve();
    stage = Stage::Track;
    const LogTrack track = build_log_track(f, c, config_.k0);
    std::string text = "t,re_z,im_z,re_f,im_f,abs_f,theta_unwrapped\n";
    for (const TrackSample& s : track.samples()) {
      text += number_text(s.t) + "," + number_text(s.z.real()) + "," + number_text(s.z.imag()) + "," +
              number_text(s.f.real()) + "," + number_text(s.f.imag()) + "," +
              number_text(std::abs(s.f)) + "," + number_text(s.theta()) + "\n";
    }
    emit(text);
    return kExitOk;
  }

  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  RunConfig config_;
};

void add_common(CLI::App* sub, Options& o, bool with_curve) {
  sub->add_option("-f,--function", o.function, "Function source text")->required();
  sub->add_option("--const", o.constants, "Constant binding name=value (repeatable)");
  if (with_curve) sub->add_option("--curve", o.curve, "Curve specification")->required();
  sub->add_option("--abs-tol", o.abs_tol, "Quadrature absolute tolerance");
  sub->add_option("--rel-tol", o.rel_tol, "Quadrature relative tolerance");
  sub->add_option("--max-depth", o.max_depth, "Quadrature bisection depth limit");
  sub->add_option("--format", o.format, "Output format: json or csv");
  sub->add_option("-o,--output", o.output, "Output file (default: standard output)");
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Complex multiplicative derivatives and integrals along parametric curves", "mulint"};
  app.require_subcommand(1);

  auto* star = app.add_subcommand("star-deriv", "Multiplicative derivative exp(f'/f) at a point");
  add_common(star, o, false);
  star->add_option("--at", o.at, "Point z, e.g. 0.5+0.5i")->required();

  auto* integ = app.add_subcommand("integrate", "Multi-valued multiplicative integral along a curve");
  add_common(integ, o, true);
  integ->add_option("--k0", o.k0, "Initial branch index");
  integ->add_option("--n", o.window, "Index window lo..hi (default -8..8)");

  auto* line = app.add_subcommand("line-integrate", "Line multiplicative integral of positive h(x,y)");
  add_common(line, o, true);
  line->add_option("--diff", o.diff, "Differential: dx, dy or ds");

  auto* riem = app.add_subcommand("riemann", "Integral product over a uniform partition");
  add_common(riem, o, true);
  riem->add_option("--k0", o.k0, "Initial branch index");
  riem->add_option("--m", o.m, "Number of partition intervals");

  auto* ver = app.add_subcommand("verify", "Run property suites over the fixture corpus");
  ver->add_option("--suite", o.suite, "all|ftc|closed|concat|product|reversal|power|line-ftc");
  ver->add_option("--seed", o.seed, "Fixture seed");
  ver->add_option("--tolerance", o.tolerance, "Residual tolerance");
  ver->add_option("--format", o.format, "Output format: json or csv");
  ver->add_option("-o,--output", o.output, "Output file (default: standard output)");

  auto* samp = app.add_subcommand("sample", "CSV of the unwrapped log track along the curve");
  add_common(samp, o, true);
  samp->add_option("--k0", o.k0, "Initial branch index");

  std::vector<const char*> cargv;
  cargv.reserve(argv.size());
  for (const std::string& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mulint: parse error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  Runner runner(o, out, err);
  try {
    return runner.dispatch(sub);
  } catch (const UsageError& e) {
    err << "mulint: " << stage_name(runner.stage) << " error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "mulint: " << stage_name(runner.stage) << " error: " << to_string(e.kind()) << ": "
        << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace mulint::cli
