#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mulint/fixtures.hpp"
#include "mulint/starcalc.hpp"
#include "test_support.hpp"

using namespace mulint;
using mulint::test::Gen;
using mulint::test::rel_err;

namespace {

const std::vector<std::string> kZ{"z"};
const std::vector<std::string> kXY{"x", "y"};

Expr fz(std::string_view s, const ConstantTable& c = {}) { return parse_expression(s, kZ, c); }
Expr fxy(std::string_view s) { return parse_expression(s, kXY); }

}  // namespace

TEST_CASE("star derivative of exp(c z) is e^c") {
  const ComplexValue c(2.0, 1.0);
  const Expr f = fz("exp(c*z)", {{"c", c}});
  Gen gen(31);
  for (int k = 0; k < 20; ++k) {
    CHECK(rel_err(star_derivative(f, gen.in_disc(3.0)), std::exp(c)) < 1e-14);
  }
}

TEST_CASE("exp(exp(z)) is a fixed point of the star derivative") {
  const Expr f = fz("exp(1*exp(z))");
  const ComplexValue z(0.3, 0.4);
  CHECK(rel_err(star_derivative(f, z), evaluate(f, z)) < 1e-14);
}

TEST_CASE("star derivative of z is exp(1/z)") {
  const ComplexValue got = star_derivative(fz("z"), ComplexValue(0.0, 2.0));
  CHECK(rel_err(got, std::exp(ComplexValue(0.0, -0.5))) < 1e-15);
}

TEST_CASE("star derivative of a constant is exactly 1") {
  for (const char* c : {"3", "-2+1i", "0.001", "exp(2i)"}) {
    CAPTURE(c);
    CHECK(std::abs(star_derivative(fz(c), ComplexValue(0.7, -1.1)) - 1.0) <= 1e-15);
  }
}

TEST_CASE("star derivative refuses zeros") {
  try {
    (void)star_derivative(fz("z-1"), ComplexValue(1.0, 0.0));
    FAIL("expected ZeroValue");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroValue);
  }
  CHECK(star_derivative_expr(fz("exp(2*z)")) == fz("exp(2*exp(2*z)/exp(2*z))"));
}

TEST_CASE("polar decomposition examples") {
  const PolarDecomposition a = polar_decompose(fz("z"), {0.0, 1.0});
  CHECK(a.modulus == 1.0);
  CHECK(a.argument == doctest::Approx(std::numbers::pi / 2));
  const PolarDecomposition b = polar_decompose(fz("exp(z)"), {1.0, 0.0});
  CHECK(b.modulus == doctest::Approx(std::numbers::e));
  CHECK(b.argument == 0.0);
  const PolarDecomposition c = polar_decompose(fz("z"), {-1.0, 0.0});
  CHECK(c.modulus == 1.0);
  CHECK(c.argument == std::numbers::pi);
  CHECK_THROWS_AS(polar_decompose(fz("z"), {0.0, 0.0}), Error);
}

TEST_CASE("real partial star derivatives") {
  CHECK(real_star_partial(fxy("exp(x)"), 0.3, -2.0, Axis::X) == doctest::Approx(std::numbers::e).epsilon(1e-8));
  CHECK(real_star_partial(fxy("exp(x*y)"), 1.0, 2.0, Axis::X) ==
        doctest::Approx(std::exp(2.0)).epsilon(1e-8));
  CHECK(real_star_partial(fxy("exp(x*y)"), 1.0, 2.0, Axis::Y) == doctest::Approx(std::exp(1.0)).epsilon(1e-8));
  CHECK(real_star_partial(fxy("5"), 1.0, 2.0, Axis::X) == 1.0);
  CHECK(real_star_partial(fxy("5"), 1.0, 2.0, Axis::Y) == 1.0);
  try {
    (void)real_star_partial(fxy("x"), 0.0, 0.0, Axis::X);
    FAIL("expected NonPositiveValue");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPositiveValue);
  }
  CHECK_THROWS_AS(real_star_partial(fxy("x+i"), 1.0, 0.0, Axis::X), Error);
}

TEST_CASE("polar relations examples") {
  const ComplexValue c(1.0, 2.0);
  Gen gen(32);
  for (int k = 0; k < 10; ++k) {
    const CauchyRiemannReport r = check_star_cr_relations(fz("exp(c*z)", {{"c", c}}), gen.in_disc(1.0));
    CHECK(r.max_residual() < 1e-6);
  }
  CHECK(check_star_cr_relations(fz("z"), {1.0, 1.0}).max_residual() < 1e-5);
  const CauchyRiemannReport constant = check_star_cr_relations(fz("3"), {0.2, 0.1});
  CHECK(constant.max_residual() < 1e-10);
  CHECK(std::abs(constant.star_value) == 1.0);
}

TEST_CASE("polar relations unwrap across the principal cut") {
  // Arg z jumps at the negative real axis; the stencil must be unwrapped
  const CauchyRiemannReport r = check_star_cr_relations(fz("z"), {-1.0, 0.0});
  CHECK(r.max_residual() < 1e-5);
}

TEST_CASE("property: star derivative is multiplicative") {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"exp(z)", "z^2+3"}, {"cos(z)+2", "exp(sin(z))"}, {"z-5", "exp(1i*z^2)"}, {"z^3+4", "1/(z+3)"}};
  Gen gen(33);
  for (const auto& [a, b] : pairs) {
    const Expr f = fz(a);
    const Expr g = fz(b);
    const Expr fg = Expr::binary(NodeKind::Mul, f, g);
    for (int k = 0; k < 50; ++k) {
      const ComplexValue z = gen.in_disc(1.5);
      CAPTURE(a);
      CAPTURE(z);
      CHECK(rel_err(star_derivative(fg, z), star_derivative(f, z) * star_derivative(g, z)) < 1e-10);
    }
  }
}

TEST_CASE("property: polar relations hold across the fixture functions") {
  Gen gen(34);
  for (const Fixture& fx : standard_corpus()) {
    CAPTURE(fx.id);
    for (int k = 0; k < 5; ++k) {
      const double t = gen.uniform(fx.curve.t_start(), fx.curve.t_end());
      const CauchyRiemannReport r = check_star_cr_relations(fx.f, curve_point(fx.curve, t));
      // finite-difference scale: relative to |f*|
      const double scale = std::max(1.0, std::abs(r.star_value));
      CHECK(r.modulus_vs_r_x < 1e-5 * scale);
      CHECK(r.modulus_vs_theta_y < 1e-5 * scale);
      CHECK(r.argument < 1e-5 * scale);
      CHECK(r.cauchy_riemann < 1e-5 * scale);
    }
  }
}
