#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "mulint/curve.hpp"
#include "mulint/multivalued.hpp"
#include "test_support.hpp"

using namespace mulint;
using mulint::test::Gen;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("curve_point on the unit circle and a diagonal segment") {
  const ParametricCurve circle = make_circle({0.0, 0.0}, 1.0);
  CHECK(curve_point(circle, 0.0) == ComplexValue(1.0, 0.0));
  const ComplexValue half = curve_point(circle, kPi);
  CHECK(half.real() == doctest::Approx(-1.0));
  CHECK(std::abs(half.imag()) < 1e-15);

  const ParametricCurve diag = make_segment({0.0, 0.0}, {1.0, 1.0});
  CHECK(curve_point(diag, 0.5) == ComplexValue(0.5, 0.5));
}

TEST_CASE("curve_point rejects parameters outside [a, b]") {
  const ParametricCurve seg = make_segment({0.0, 0.0}, {1.0, 0.0});
  try {
    curve_point(seg, 1.5);
    FAIL("expected ParameterOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParameterOutOfRange);
  }
  CHECK_THROWS_AS(curve_point(seg, -0.1), Error);
}

TEST_CASE("curve construction enforces abutting ranges and joint continuity") {
  const std::vector<std::string> vars{"t"};
  auto seg = [&](const char* x, const char* y, double a, double b) {
    return CurveSegment(parse_expression(x, vars), parse_expression(y, vars), a, b);
  };
  CHECK_NOTHROW(ParametricCurve({seg("t", "0", 0, 1), seg("1", "t-1", 1, 2)}));
  // gap in parameter
  CHECK_THROWS_AS(ParametricCurve({seg("t", "0", 0, 1), seg("1", "t-1", 1.5, 2)}), Error);
  // geometric jump
  CHECK_THROWS_AS(ParametricCurve({seg("t", "0", 0, 1), seg("2", "t-1", 1, 2)}), Error);
  // closed flag needs matching endpoints
  CHECK_THROWS_AS(ParametricCurve({seg("t", "0", 0, 1)}, true), Error);
  // t_start < t_end
  CHECK_THROWS_AS(seg("t", "0", 1, 1), Error);
  // complex-valued coordinates are not a planar curve
  CHECK_THROWS_AS(seg("t*i", "0", 0, 1), Error);
}

TEST_CASE("polyline, split, reverse and chaining keep the geometry") {
  const std::vector<ComplexValue> v{{0, 0}, {1, 0}, {1, 1}};
  const ParametricCurve poly = make_polyline(v);
  CHECK(poly.segments().size() == 2);
  CHECK(std::abs(poly.end_point() - ComplexValue(1, 1)) < 1e-15);
  CHECK(std::abs(curve_point(poly, 1.5) - ComplexValue(1, 0.5)) < 1e-15);

  const auto [left, right] = poly.split(0.5);
  CHECK(left.t_end() == 0.5);
  CHECK(right.t_start() == 0.5);
  CHECK(right.segments().size() == 2);
  CHECK(std::abs(left.end_point() - ComplexValue(0.5, 0)) < 1e-15);

  const ParametricCurve rev = poly.reversed();
  CHECK(std::abs(rev.start_point() - poly.end_point()) < 1e-15);
  CHECK(std::abs(rev.end_point() - poly.start_point()) < 1e-15);
  CHECK(std::abs(curve_point(rev, 0.5) - curve_point(poly, 1.5)) < 1e-15);
  CHECK(std::abs(rev.segments()[0].velocity(0.5) + poly.segments()[1].velocity(1.5)) < 1e-15);

  const ParametricCurve back = make_segment({1, 1}, {0, 0});
  const ParametricCurve loop = poly.then(back, true);
  CHECK(loop.closed());
  CHECK(loop.t_end() == 3.0);
  CHECK(loop.displacement() == ComplexValue(0, 0));
}

TEST_CASE("multivalue_at examples") {
  const MultiValuedIntegral unit_step(0.0, 1.0);
  for (int n = -8; n <= 8; ++n) {
    CHECK(std::abs(multivalue_at(unit_step, n) - ComplexValue(1.0, 0.0)) < 1e-12);
  }
  const ComplexValue p(0.3, -1.7);
  const MultiValuedIntegral any(std::log(p), ComplexValue(0.37, 0.2));
  CHECK(mulint::test::rel_err(multivalue_at(any, 0), p) < 1e-15);

  // exp(2 pi (1/2) i) = -1
  const MultiValuedIntegral half(0.0, 0.5);
  CHECK(std::abs(multivalue_at(half, 1) - ComplexValue(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("cardinality trichotomy") {
  CHECK(classify_displacement({1.0, 0.0}) == Cardinality::single());
  CHECK(classify_displacement({-3.0, 0.0}) == Cardinality::single());
  CHECK(classify_displacement({0.0, 0.0}) == Cardinality::single());
  CHECK(classify_displacement({0.5, 0.0}) == Cardinality::finite(2));
  CHECK(classify_displacement({-7.0 / 3.0, 0.0}) == Cardinality::finite(3));
  CHECK(classify_displacement({5.0 / 64.0, 0.0}) == Cardinality::finite(64));
  CHECK(classify_displacement({1.0 / 65.0, 0.0}) == Cardinality::countable());
  CHECK(classify_displacement({std::sqrt(2.0), 0.0}) == Cardinality::countable());
  CHECK(classify_displacement({1.0, 1e-3}) == Cardinality::countable());
  CHECK(classify_displacement({0.5 + 1e-12, 0.0}) == Cardinality::finite(2));

  const auto pq = rational_approximation(0.6);
  REQUIRE(pq.has_value());
  CHECK(pq->first == 3);
  CHECK(pq->second == 5);
}

TEST_CASE("overflowing values are signalled with their logarithm") {
  const MultiValuedIntegral big(ComplexValue(750.0, 1.0), 1.0);
  try {
    (void)big.principal();
    FAIL("expected OverflowSignal");
  } catch (const OverflowSignal& e) {
    CHECK(e.log_value() == ComplexValue(750.0, 1.0));
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  CHECK(big.log_value(0) == ComplexValue(750.0, 1.0));
}

TEST_CASE("property: index shift acts as a group") {
  Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiValuedIntegral I(gen.in_disc(2.0), gen.in_disc(1.5));
    const int n = gen.integer(-8, 8);
    const int m = gen.integer(-8, 8);
    const ComplexValue factor = std::exp(2.0 * kPi * m * I.delta() * ComplexValue(0, 1));
    CHECK(mulint::test::rel_err(I.value(n + m), factor * I.value(n)) < 1e-11);
  }
}

TEST_CASE("property: rational displacement p/q gives exactly q values") {
  Gen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int q = gen.integer(2, 64);
    int p = gen.integer(-3 * q, 3 * q);
    if (std::gcd(p, q) != 1) continue;
    const MultiValuedIntegral I(gen.in_disc(1.0), ComplexValue(static_cast<double>(p) / q, 0.0));
    REQUIRE(I.cardinality() == Cardinality::finite(q));
    std::vector<ComplexValue> values;
    for (int n = 0; n < q; ++n) values.push_back(I.value(n));
    // distinct_tol: q-th roots of unity on |I_0| are separated by 2|I_0| sin(pi/q)
    const double distinct_tol = 1e-9 * std::abs(values[0]);
    for (int a = 0; a < q; ++a) {
      for (int b = a + 1; b < q; ++b) CHECK(std::abs(values[a] - values[b]) > distinct_tol);
      CHECK(mulint::test::rel_err(I.value(a + q), values[a]) < 1e-12);
    }
  }
}

TEST_CASE("property: real displacement keeps the modulus, imaginary keeps the argument") {
  Gen gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexValue log0 = gen.in_disc(2.0);
    const MultiValuedIntegral real_delta(log0, ComplexValue(gen.uniform(-3, 3), 0.0));
    const MultiValuedIntegral imag_delta(log0, ComplexValue(0.0, gen.uniform(-0.3, 0.3)));
    const double modulus0 = std::abs(real_delta.value(0));
    const double arg0 = std::arg(imag_delta.value(0));
    for (int n = -8; n <= 8; ++n) {
      CHECK(std::abs(std::abs(real_delta.value(n)) - modulus0) <= 1e-12 * modulus0);
      CHECK(std::abs(std::arg(imag_delta.value(n)) - arg0) < 1e-12);
    }
  }
}
