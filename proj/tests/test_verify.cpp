#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mulint/verify.hpp"

using namespace mulint;

namespace {

constexpr double kPi = std::numbers::pi;
const std::vector<std::string> kZ{"z"};
const std::vector<std::string> kXY{"x", "y"};

Expr fz(std::string_view s) { return parse_expression(s, kZ); }
Expr fxy(std::string_view s) { return parse_expression(s, kXY); }

ParametricCurve diag() { return make_segment({0, 0}, {1, 1}); }
ParametricCurve right_half() { return make_arc({0, 0}, 1.0, -kPi / 2, kPi / 2); }
ParametricCurve quarter() { return make_arc({0, 0}, 1.0, 0.0, kPi / 2); }

void check_report(const PropertyReport& r, double bound = 1e-9) {
  CHECK(r.passed());
  CHECK(r.fixtures_run == 1);
  CHECK(r.max_residual < bound);
}

}  // namespace

TEST_CASE("report bookkeeping") {
  PropertyReport r{"demo", 0, 0.0, 1e-3, {}};
  r.record("a", 1e-5);
  r.record("b", 5e-3);
  CHECK(r.fixtures_run == 2);
  CHECK(r.max_residual == 5e-3);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].first == "b");
  CHECK_FALSE(r.passed());

  PropertyReport other{"demo", 0, 0.0, 1e-3, {}};
  other.record("c", 2e-4);
  other.merge(r);
  CHECK(other.fixtures_run == 3);
  CHECK(other.max_residual == 5e-3);
  CHECK(other.failures.size() == 1);

  PropertyReport nan_case{"demo", 0, 0.0, 1e-3, {}};
  nan_case.record("x", NAN);
  CHECK_FALSE(nan_case.passed());
}

TEST_CASE("log residual compares modulo 2 pi i") {
  CHECK(log_relative_residual({1.0, 0.5}, {1.0, 0.5 + 2 * kPi}) < 1e-15);
  CHECK(log_relative_residual({1.0, 0.0}, {1.0 + 1e-6, 0.0}) == doctest::Approx(1e-6).epsilon(1e-5));
}

TEST_CASE("fundamental theorem examples") {
  check_report(check_fundamental_theorem(fz("exp((1+2i)*z)"), diag()));
  check_report(check_fundamental_theorem(fz("z"), right_half()));
  check_report(check_fundamental_theorem(fz("-4+1i"), diag()));
}

TEST_CASE("closed curve examples") {
  const ParametricCurve circle = make_circle({0, 0}, 1.0);
  check_report(check_closed_curve_unity(fz("z"), circle));
  check_report(check_closed_curve_unity(fz("exp(z^2)"), circle));
  check_report(check_closed_curve_unity(fz("7"), make_circle({1, 2}, 0.5)));
  CHECK_THROWS_AS(check_closed_curve_unity(fz("z"), diag()), Error);
}

TEST_CASE("concatenation examples") {
  check_report(check_concatenation(fz("exp(1+2i)"), diag(), 0.5));
  check_report(check_concatenation(fz("1"), diag(), 0.5));
  check_report(check_concatenation(fz("exp(z^2+1)"), quarter(), kPi / 6));
  CHECK_THROWS_AS(check_concatenation(fz("1"), diag(), 1.0), Error);
}

TEST_CASE("product and division examples") {
  check_report(check_product_division(fz("1"), fz("1"), diag()));
  check_report(check_product_division(fz("exp(0.5*z)"), fz("exp((1-1i)*z)"), diag()));
  check_report(check_product_division(fz("exp(z^2+1)"), fz("exp(2*z)"), quarter()));
}

TEST_CASE("reversal examples") {
  check_report(check_reversal(fz("1"), diag()));
  check_report(check_reversal(fz("exp(1+2i)"), make_segment({0.3, 0}, {-1, 2})));
  check_report(check_reversal(fz("exp(z^2+1)"), quarter()));
}

TEST_CASE("natural power examples") {
  for (int p : {0, 1, 3}) {
    CAPTURE(p);
    check_report(check_natural_power(fz("exp((1+2i)*z)"), diag(), p));
  }
  CHECK_THROWS_AS(check_natural_power(fz("z"), right_half(), -1), Error);
}

TEST_CASE("line fundamental theorem examples") {
  check_report(check_line_fundamental(fxy("exp(x+y)"), make_segment({-1, 0.5}, {2, 1})));
  check_report(check_line_fundamental(fxy("7"), make_circle({0, 0}, 1.0)));
  check_report(check_line_fundamental(fxy("exp(x*y)"), diag()), 1e-8);
  CHECK_THROWS_AS(check_line_fundamental(fxy("x"), make_segment({-1, 0}, {1, 0})), Error);
}

TEST_CASE("tolerance sets the failure threshold") {
  CheckOptions strict;
  strict.tolerance = 1e-30;
  strict.fixture_id = "strict";
  const PropertyReport r = check_fundamental_theorem(fz("exp(z^2+1)"), quarter(), strict);
  CHECK(r.fixtures_run == 1);
  if (r.max_residual > 1e-30) {
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].first == "strict");
  }
}

TEST_CASE("suite names round trip") {
  CHECK(parse_suites("all").size() == 7);
  for (Suite s : parse_suites("all")) {
    const std::vector<Suite> one = parse_suites(suite_name(s));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == s);
  }
  CHECK_THROWS_AS(parse_suites("bogus"), Error);
}

TEST_CASE("every suite passes over its corpus") {
  for (Suite s : parse_suites("all")) {
    CAPTURE(suite_name(s));
    const PropertyReport r = run_suite(s);
    CHECK(r.passed());
    CHECK(r.fixtures_run >= 10);
    CHECK(r.max_residual < 1e-8);
    CHECK(r.property == suite_name(s));
  }
}

TEST_CASE("suite reports are deterministic given the seed") {
  for (Suite s : {Suite::Ftc, Suite::Product}) {
    const PropertyReport a = run_suite(s, 99);
    const PropertyReport b = run_suite(s, 99);
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.fixtures_run == b.fixtures_run);
  }
}
