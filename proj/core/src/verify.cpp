#include "mulint/verify.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "mulint/branch.hpp"
#include "mulint/integrate.hpp"
#include "mulint/starcalc.hpp"

namespace mulint {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PropertyReport new_report(std::string_view name, const CheckOptions& options) {
  PropertyReport r;
  r.property = std::string(name);
  r.tolerance = options.tolerance;
  return r;
}

double theta_at_start(const LogTrack& track) { return track.front().theta(); }

}  // namespace

void PropertyReport::record(const std::string& fixture_id, double residual) {
  fixtures_run += 1;
  if (!std::isfinite(residual)) {
    max_residual = std::numeric_limits<double>::infinity();
    failures.emplace_back(fixture_id, residual);
    return;
  }
  max_residual = std::max(max_residual, residual);
  if (!(residual < tolerance)) failures.emplace_back(fixture_id, residual);
}

void PropertyReport::merge(const PropertyReport& other) {
  fixtures_run += other.fixtures_run;
  max_residual = std::max(max_residual, other.max_residual);
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

double log_relative_residual(ComplexValue log_a, ComplexValue log_b) {
  ComplexValue d = log_a - log_b;
  d = ComplexValue(d.real(), d.imag() - kTwoPi * std::round(d.imag() / kTwoPi));
  if (!(d.real() < 700.0)) return std::numeric_limits<double>::infinity();
  return std::abs(std::exp(d) - 1.0);
}

PropertyReport check_fundamental_theorem(const Expr& f, const ParametricCurve& curve,
                                         const CheckOptions& options) {
  PropertyReport report = new_report("fundamental-theorem", options);
  const Expr df = differentiate(f, "z");
  const Expr fstar = Expr::exp(df / f);
  const ComplexValue za = curve.start_point();
  const ComplexValue zb = curve.end_point();
  const ComplexValue fa = evaluate(f, za);
  const ComplexValue fb = evaluate(f, zb);

  // Anchor log f* at f'/f itself, so the computed index n matches the
  // closed-form index n.
  const double anchor = (evaluate(df, za) / fa).imag();
  const BranchSelection k0 = branch_matching(evaluate(fstar, za), anchor);
  const MultiValuedIntegral integral = star_integral(fstar, curve, k0, options.quadrature).integral;

  const MultiValuedIntegral expected(principal_log(fb) - principal_log(fa), curve.displacement());
  double worst = 0.0;
  for (std::int64_t n = options.n_lo; n <= options.n_hi; ++n) {
    worst = std::max(worst, log_relative_residual(integral.log_value(n), expected.log_value(n)));
  }
  report.record(options.fixture_id, worst);
  return report;
}

PropertyReport check_closed_curve_unity(const Expr& f, const ParametricCurve& curve,
                                        const CheckOptions& options) {
  PropertyReport report = new_report("closed-curve-unity", options);
  if (!curve.closed()) throw Error(ErrorKind::InvalidCurve, "closed-curve check needs a closed curve");
  const Expr fstar = star_derivative_expr(f);
  const MultiValuedIntegral integral = star_integral(fstar, curve, {}, options.quadrature).integral;
  double worst = 0.0;
  for (std::int64_t n = options.n_lo; n <= options.n_hi; ++n) {
    worst = std::max(worst, log_relative_residual(integral.log_value(n), 0.0));
  }
  report.record(options.fixture_id, worst);
  return report;
}

PropertyReport check_concatenation(const Expr& f, const ParametricCurve& curve, double split,
                                   const CheckOptions& options) {
  PropertyReport report = new_report("concatenation", options);
  const auto [first, second] = curve.split(split);
  const LogTrack whole_track = build_log_track(f, curve);
  const LogTrack first_track = build_log_track(f, first);
  const BranchSelection k_second = branch_matching(evaluate(f, second.start_point()),
                                                   first_track.back().theta());
  const LogTrack second_track = build_log_track(f, second, k_second);

  const auto whole = star_integral(whole_track, options.quadrature).integral;
  const auto left = star_integral(first_track, options.quadrature).integral;
  const auto right = star_integral(second_track, options.quadrature).integral;
  double worst = 0.0;
  for (std::int64_t n = options.n_lo; n <= options.n_hi; ++n) {
    worst = std::max(worst, log_relative_residual(whole.log_value(n),
                                                  left.log_value(n) + right.log_value(n)));
  }
  report.record(options.fixture_id, worst);
  return report;
}

PropertyReport check_product_division(const Expr& f, const Expr& g, const ParametricCurve& curve,
                                      const CheckOptions& options) {
  PropertyReport report = new_report("product-division", options);
  const LogTrack tf = build_log_track(f, curve);
  const LogTrack tg = build_log_track(g, curve);
  const ComplexValue za = curve.start_point();
  const Expr prod = f * g;
  const Expr quot = f / g;
  const LogTrack tp = build_log_track(
      prod, curve, branch_matching(evaluate(prod, za), theta_at_start(tf) + theta_at_start(tg)));
  const LogTrack tq = build_log_track(
      quot, curve, branch_matching(evaluate(quot, za), theta_at_start(tf) - theta_at_start(tg)));

  const auto If = star_integral(tf, options.quadrature).integral;
  const auto Ig = star_integral(tg, options.quadrature).integral;
  const auto Ip = star_integral(tp, options.quadrature).integral;
  const auto Iq = star_integral(tq, options.quadrature).integral;
  double worst = 0.0;
  for (std::int64_t nf = -2; nf <= 2; ++nf) {
    for (std::int64_t ng = -2; ng <= 2; ++ng) {
      worst = std::max(worst, log_relative_residual(If.log_value(nf) + Ig.log_value(ng),
                                                    Ip.log_value(nf + ng)));
      worst = std::max(worst, log_relative_residual(If.log_value(nf) - Ig.log_value(ng),
                                                    Iq.log_value(nf - ng)));
    }
  }
  report.record(options.fixture_id, worst);
  return report;
}

PropertyReport check_reversal(const Expr& f, const ParametricCurve& curve,
                              const CheckOptions& options) {
  PropertyReport report = new_report("reversal", options);
  const LogTrack forward = build_log_track(f, curve);
  const ParametricCurve back_curve = curve.reversed();
  const LogTrack backward = build_log_track(
      f, back_curve, branch_matching(evaluate(f, back_curve.start_point()), forward.back().theta()));
  const auto I = star_integral(forward, options.quadrature).integral;
  const auto J = star_integral(backward, options.quadrature).integral;
  double worst = 0.0;
  for (std::int64_t n = options.n_lo; n <= options.n_hi; ++n) {
    worst = std::max(worst, log_relative_residual(I.log_value(n) + J.log_value(n), 0.0));
  }
  report.record(options.fixture_id, worst);
  return report;
}

PropertyReport check_natural_power(const Expr& f, const ParametricCurve& curve, int p,
                                   const CheckOptions& options) {
  PropertyReport report = new_report("natural-power", options);
  if (p < 0) throw Error(ErrorKind::InvalidArgument, "power must be a natural number");
  const LogTrack tf = build_log_track(f, curve);
  const Expr fp = Expr::pow(f, Expr::constant(static_cast<double>(p)));
  const LogTrack tp = build_log_track(
      fp, curve,
      branch_matching(evaluate(fp, curve.start_point()), p * theta_at_start(tf)));
  const auto If = star_integral(tf, options.quadrature).integral;
  const auto Ip = star_integral(tp, options.quadrature).integral;
  double worst = 0.0;
  for (std::int64_t n = -2; n <= 2; ++n) {
    worst = std::max(worst, log_relative_residual(static_cast<double>(p) * If.log_value(n),
                                                  Ip.log_value(p * n)));
  }
  report.record(options.fixture_id, worst);
  return report;
}

PropertyReport check_line_fundamental(const Expr& g, const ParametricCurve& curve,
                                      const CheckOptions& options) {
  PropertyReport report = new_report("line-fundamental-theorem", options);
  auto partial = [&](Axis axis) {
    return [&g, axis](double x, double y) { return real_star_partial(g, x, y, axis); };
  };
  const double lhs = line_star_integral(partial(Axis::X), curve, Differential::Dx,
                                        options.quadrature) *
                     line_star_integral(partial(Axis::Y), curve, Differential::Dy,
                                        options.quadrature);
  auto g_at = [&](ComplexValue z) {
    const std::array<ComplexValue, 2> xy{ComplexValue(z.real(), 0.0), ComplexValue(z.imag(), 0.0)};
    const ComplexValue v = evaluate(g, xy);
    if (!(v.real() > 0.0)) throw Error(ErrorKind::NonPositiveValue, "g is not positive");
    return v.real();
  };
  const double rhs = g_at(curve.end_point()) / g_at(curve.start_point());
  report.record(options.fixture_id, std::abs(lhs / rhs - 1.0));
  return report;
}

std::string_view suite_name(Suite suite) noexcept {
  switch (suite) {
    case Suite::Ftc: return "ftc";
    case Suite::Closed: return "closed";
    case Suite::Concat: return "concat";
    case Suite::Product: return "product";
    case Suite::Reversal: return "reversal";
    case Suite::Power: return "power";
    case Suite::LineFtc: return "line-ftc";
  }
  return "unknown";
}

std::vector<Suite> parse_suites(std::string_view name) {
  constexpr std::array<Suite, 7> all{Suite::Ftc,      Suite::Closed, Suite::Concat,
                                     Suite::Product,  Suite::Reversal, Suite::Power,
                                     Suite::LineFtc};
  if (name == "all") return {all.begin(), all.end()};
  for (Suite s : all) {
    if (suite_name(s) == name) return {s};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

namespace {

template <typename Check>
void run_guarded(PropertyReport& report, const std::string& id, Check&& check) {
  try {
    report.merge(check());
  } catch (const Error&) {
    report.record(id, std::numeric_limits<double>::infinity());
  }
}

}  // namespace

PropertyReport run_suite(Suite suite, std::uint64_t seed, double tolerance) {
  PropertyReport report;
  report.property = std::string(suite_name(suite));
  report.tolerance = tolerance;
  CheckOptions options;
  options.tolerance = tolerance;

  switch (suite) {
    case Suite::Ftc:
      for (const Fixture& fx : standard_corpus(seed)) {
        options.fixture_id = fx.id;
        run_guarded(report, fx.id, [&] { return check_fundamental_theorem(fx.f, fx.curve, options); });
      }
      break;
    case Suite::Closed:
      for (const Fixture& fx : closed_corpus(seed)) {
        options.fixture_id = fx.id;
        run_guarded(report, fx.id, [&] { return check_closed_curve_unity(fx.f, fx.curve, options); });
      }
      break;
    case Suite::Concat:
      for (const Fixture& fx : standard_corpus(seed)) {
        options.fixture_id = fx.id;
        const double c = fx.curve.t_start() + (fx.curve.t_end() - fx.curve.t_start()) / 3.0;
        run_guarded(report, fx.id, [&] { return check_concatenation(fx.f, fx.curve, c, options); });
      }
      break;
    case Suite::Product:
      for (const PairFixture& fx : product_corpus(seed)) {
        options.fixture_id = fx.id;
        run_guarded(report, fx.id,
                    [&] { return check_product_division(fx.f, fx.g, fx.curve, options); });
      }
      break;
    case Suite::Reversal:
      for (const Fixture& fx : standard_corpus(seed)) {
        options.fixture_id = fx.id;
        run_guarded(report, fx.id, [&] { return check_reversal(fx.f, fx.curve, options); });
      }
      break;
    case Suite::Power:
      for (const Fixture& fx : standard_corpus(seed)) {
        for (int p : {0, 1, 3}) {
          options.fixture_id = fx.id + "^" + std::to_string(p);
          run_guarded(report, options.fixture_id,
                      [&] { return check_natural_power(fx.f, fx.curve, p, options); });
        }
      }
      break;
    case Suite::LineFtc:
      for (const LineFixture& fx : line_corpus()) {
        options.fixture_id = fx.id;
        run_guarded(report, fx.id, [&] { return check_line_fundamental(fx.h, fx.curve, options); });
      }
      break;
  }
  return report;
}

}  // namespace mulint
