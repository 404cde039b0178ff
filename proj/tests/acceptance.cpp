// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "mulint/mulint.hpp"

using namespace mulint;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr ComplexValue kI(0.0, 1.0);
const std::vector<std::string> kZ{"z"};

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Expr fz(std::string_view s) { return parse_expression(s, kZ); }

/// |w1 / w2 - 1| for w = exp(log), phases compared modulo 2 pi.
double log_rel(ComplexValue log_a, ComplexValue log_b) { return log_relative_residual(log_a, log_b); }

Verdict criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const StarIntegralResult r = star_integral(fz("exp(1/z)"), make_circle({0, 0}, 1.0));
  double worst = 0.0;
  for (int n = -5; n <= 5; ++n) worst = std::max(worst, std::abs(r.integral.value(n) - 1.0));
  const double elapsed = seconds_since(start);
  return {worst < 1e-9 && elapsed < 1.0, fmt("max |I_n - 1| = %.3g over n in [-5,5], %.3f s", worst, elapsed)};
}

Verdict criterion_2() {
  const ComplexValue c(1.0, 2.0);
  const StarIntegralResult r = star_integral(Expr::exp(Expr::constant(c)), make_segment({0, 0}, {1, 1}));
  double worst = 0.0;
  for (int n = -3; n <= 3; ++n) {
    const ComplexValue want = std::exp(ComplexValue(1, 1) * (c + 2.0 * kPi * static_cast<double>(n) * kI));
    worst = std::max(worst, std::abs(r.integral.value(n) - want) / std::abs(want));
  }
  return {worst < 1e-10, fmt("max relative error = %.3g over n in [-3,3]", worst)};
}

Verdict criterion_3() {
  const StarIntegralResult r = star_integral(fz("exp(1*exp(z))"), make_segment({0, 0}, {0, kPi}));
  double worst = 0.0;
  for (int n = -3; n <= 3; ++n) {
    worst = std::max(worst, log_rel(r.integral.log_value(n), {-2.0 * kPi * kPi * n - 2.0, 0.0}));
  }
  return {worst < 1e-9, fmt("max log-space relative error = %.3g over n in [-3,3]", worst)};
}

Verdict criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  const PropertyReport r = run_suite(Suite::Ftc);
  const double elapsed = seconds_since(start);
  const bool ok = r.passed() && r.fixtures_run >= 25 && r.max_residual < 1e-8 && elapsed < 30.0;
  return {ok, fmt("%d fixtures, max residual = %.3g, %.2f s", r.fixtures_run, r.max_residual, elapsed)};
}

Verdict criterion_5() {
  const PropertyReport r = run_suite(Suite::Closed);
  const bool ok = r.passed() && r.fixtures_run >= 10 && r.max_residual < 1e-8;
  return {ok, fmt("%d closed fixtures, max |I_n - 1| = %.3g", r.fixtures_run, r.max_residual)};
}

// The midpoint product is exact when log f is affine along a straight piece
// (constants, e^{cz} on segments); there the error sits at rounding level and
// cannot decrease further, so a step also counts as converged when both
// errors are below the noise floor.
constexpr double kRiemannNoiseFloor = 1e-12;

Verdict criterion_6() {
  QuadratureSettings tight;
  tight.abs_tol = tight.rel_tol = 1e-13;
  double worst_final = 0.0;
  int fixtures = 0;
  int exact = 0;
  std::string broken;
  for (const Fixture& fx : standard_corpus()) {
    const LogTrack track = build_log_track(fx.f, fx.curve);
    const ComplexValue reference = contour_integral(track, tight).value;
    auto err = [&](int k) { return log_rel(riemann_log_sum(track, std::int64_t{1} << k), reference); };
    std::vector<double> errs;
    for (int k = 7; k <= 16; ++k) errs.push_back(err(k));
    worst_final = std::max(worst_final, errs.back());
    bool all_floor = true;
    for (int k = 7; k <= 14; ++k) {
      const double e0 = errs[k - 7];
      const double e1 = errs[k - 6];
      const bool at_floor = e0 < kRiemannNoiseFloor && e1 < kRiemannNoiseFloor;
      all_floor = all_floor && at_floor;
      if (!(e1 < e0) && !at_floor) {
        broken += fmt(" %s@k=%d(%.2g>=%.2g)", fx.id.c_str(), k, e1, e0);
      }
    }
    if (all_floor) ++exact;
    ++fixtures;
  }
  const bool ok = worst_final < 1e-5 && broken.empty();
  return {ok, fmt("%d fixtures, max relative error at m=2^16 = %.3g, monotone k=7..14 (%d exact at rounding level)",
                  fixtures, worst_final, exact) +
                  (broken.empty() ? "" : "; non-monotone:" + broken)};
}

Verdict criterion_7() {
  double worst = 0.0;
  int fixtures = 0;
  for (const Fixture& fx : standard_corpus()) {
    const LogTrack track = build_log_track(fx.f, fx.curve);
    const StarIntegralResult r = star_integral(track);
    for (int n = -3; n <= 3; ++n) worst = std::max(worst, log_rel(cartesian_log_value(track, n), r.integral.log_value(n)));
    ++fixtures;
  }
  return {worst < 1e-9, fmt("%d fixtures, max relative deviation = %.3g over n in [-3,3]", fixtures, worst)};
}

std::vector<ComplexValue> window_values(const MultiValuedIntegral& I) {
  std::vector<ComplexValue> v;
  for (int n = -8; n <= 8; ++n) v.push_back(I.value(n));
  return v;
}

int count_distinct(const std::vector<ComplexValue>& v, double rel_tol) {
  std::vector<ComplexValue> reps;
  for (ComplexValue w : v) {
    bool seen = false;
    for (ComplexValue r : reps) seen = seen || std::abs(w - r) <= rel_tol * std::abs(r);
    if (!seen) reps.push_back(w);
  }
  return static_cast<int>(reps.size());
}

Verdict criterion_8() {
  const Expr f = fz("exp(z^2+1)");
  const MultiValuedIntegral one = star_integral(f, make_segment({0, 0}, {1, 0})).integral;
  const MultiValuedIntegral half = star_integral(f, make_segment({0, 0}, {0.5, 0})).integral;
  const MultiValuedIntegral diag =
      star_integral(f, make_segment({0, 0}, ComplexValue(1, 1) / std::sqrt(2.0))).integral;

  const std::vector<ComplexValue> v1 = window_values(one);
  double spread = 0.0;
  for (ComplexValue w : v1) spread = std::max(spread, std::abs(w - v1[8]) / std::abs(v1[8]));
  const int distinct_half = count_distinct(window_values(half), 1e-9);
  const int distinct_diag = count_distinct(window_values(diag), 1e-9);

  const bool ok = one.cardinality() == Cardinality::single() && spread < 1e-12 &&
                  half.cardinality() == Cardinality::finite(2) && distinct_half == 2 &&
                  diag.cardinality() == Cardinality::countable() && distinct_diag >= 17;
  return {ok, fmt("dz=1: single, spread %.3g; dz=1/2: finite(%d), %d distinct; dz=(1+i)/sqrt2: %s, %d distinct",
                  spread, half.cardinality().q, distinct_half,
                  diag.cardinality() == Cardinality::countable() ? "countable" : "not countable", distinct_diag)};
}

Verdict criterion_9() {
  bool ok = true;
  std::string detail;
  for (Suite s : {Suite::Concat, Suite::Product, Suite::Reversal, Suite::Power, Suite::LineFtc}) {
    const PropertyReport r = run_suite(s);
    ok = ok && r.passed() && r.max_residual < 1e-8;
    detail += fmt("%s %d/%.2g; ", r.property.c_str(), r.fixtures_run, r.max_residual);
  }
  detail.resize(detail.size() - 2);
  return {ok, "suite fixtures/max residual: " + detail};
}

Verdict criterion_10() {
  double worst = 0.0;
  int fixtures = 0;
  for (const Fixture& fx : standard_corpus()) {
    const MultiValuedIntegral base = star_integral(fx.f, fx.curve).integral;
    const MultiValuedIntegral up = star_integral(fx.f, fx.curve, {1}).integral;
    for (int n = -3; n <= 3; ++n) worst = std::max(worst, log_rel(up.log_value(n), base.log_value(n + 1)));
    ++fixtures;
  }
  return {worst < 1e-10, fmt("%d fixtures, max residual of I_n(k0=1) vs I_{n+1}(k0=0) = %.3g", fixtures, worst)};
}

Verdict criterion_11() {
  const QuadratureResult loop =
      contour_integral([](double, ComplexValue z) { return 1.0 / z; }, make_circle({0, 0}, 1.0));
  const double loop_err = std::abs(loop.value - 2.0 * kPi * kI);

  const std::vector<const char*> corpus{"exp(1*exp(z))", "sin(z)*cos(z^2)", "exp(z^2+1)", "z^4-3*z+2",
                                        "cos(exp(z)/2)"};
  std::mt19937_64 engine(0x5eed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const double h = 1e-6;
  double worst = 0.0;
  int points = 0;
  while (points < 100) {
    const ComplexValue z(u(engine), u(engine));
    if (std::abs(z) > 2.0) continue;
    const Expr f = fz(corpus[points % corpus.size()]);
    const ComplexValue exact = evaluate(differentiate(f, "z"), z);
    if (std::abs(exact) < 1e-3) continue;
    for (ComplexValue step : {ComplexValue(h, 0), ComplexValue(0, h)}) {
      const ComplexValue fd = (evaluate(f, z + step) - evaluate(f, z - step)) / (2.0 * step);
      worst = std::max(worst, std::abs(fd - exact) / std::abs(exact));
    }
    ++points;
  }
  return {loop_err < 1e-10 && worst < 1e-6,
          fmt("|loop dz/z - 2 pi i| = %.3g; derivative vs central difference at %d points: max rel %.3g", loop_err,
              points, worst)};
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                       criterion_5, criterion_6, criterion_7, criterion_8,
                                                       criterion_9, criterion_10, criterion_11};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu: %s\n", v.pass ? "PASS" : "FAIL", i + 1, v.detail.c_str());
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
