#include "mulint/fixtures.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "mulint/starcalc.hpp"

namespace mulint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRejectBelow = 1e-6;

const std::vector<std::string>& z_vars() {
  static const std::vector<std::string> v{"z"};
  return v;
}

const std::vector<std::string>& xy_vars() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

struct NamedFunction {
  std::string id;
  Expr f;
};

struct NamedCurve {
  std::string id;
  ParametricCurve curve;
};

std::vector<NamedFunction> function_family(std::uint64_t seed) {
  FixtureRng rng(seed);
  std::vector<NamedFunction> out;
  out.push_back({"const3", parse_z("3")});
  out.push_back({"const_m2p1i", parse_z("-2+i")});
  for (int k = 0; k < 5; ++k) {
    const ComplexValue c = rng.complex_in_box(1.5);
    out.push_back({"expcz" + std::to_string(k), parse_z("exp(c*z)", {{"c", c}})});
  }
  out.push_back({"expexpz", parse_z("exp(exp(z))")});
  out.push_back({"z", parse_z("z")});
  for (int k = 0; k < 5; ++k) {
    const ComplexValue a = rng.complex_in_box(1.0);
    const ComplexValue b = rng.complex_in_box(1.0);
    const ComplexValue c = rng.complex_in_box(1.0);
    out.push_back({"expquad" + std::to_string(k),
                   parse_z("exp(a*z^2 + b*z + c)", {{"a", a}, {"b", b}, {"c", c}})});
  }
  return out;
}

std::vector<NamedCurve> open_curves() {
  std::vector<NamedCurve> out;
  out.push_back({"seg_0_1p1i", make_segment({0.0, 0.0}, {1.0, 1.0})});
  out.push_back({"seg_slant", make_segment({0.5, -0.3}, {-0.4, 0.8})});
  out.push_back({"arc_right", make_arc({0.0, 0.0}, 1.0, -kPi / 2, kPi / 2)});
  out.push_back({"arc_quarter", make_arc({0.2, 0.1}, 1.2, 0.0, kPi / 2)});
  out.push_back({"unit_circle", make_circle({0.0, 0.0}, 1.0)});
  const std::array<ComplexValue, 3> poly{ComplexValue(0.3, 0.2), ComplexValue(1.1, 0.5),
                                         ComplexValue(0.4, 1.2)};
  out.push_back({"polyline2", make_polyline(poly)});
  return out;
}

std::vector<NamedCurve> closed_curves() {
  std::vector<NamedCurve> out;
  out.push_back({"unit_circle", make_circle({0.0, 0.0}, 1.0)});
  out.push_back({"circle_off", make_circle({0.5, 0.5}, 0.7)});
  out.push_back({"circle_big", make_circle({-0.3, 0.2}, 1.5)});
  const std::array<ComplexValue, 4> tri{ComplexValue(0.2, 0.1), ComplexValue(1.3, 0.4),
                                        ComplexValue(0.5, 1.4), ComplexValue(0.2, 0.1)};
  out.push_back({"triangle", make_polyline(tri, true)});
  return out;
}

bool admissible(const Expr& f, const ParametricCurve& curve) {
  if (min_modulus_on_curve(f, curve) < kRejectBelow) return false;
  return min_modulus_on_curve(star_derivative_expr(f), curve) >= kRejectBelow;
}

}  // namespace

double FixtureRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

ComplexValue FixtureRng::complex_in_box(double half_width) {
  const double re = uniform(-half_width, half_width);
  const double im = uniform(-half_width, half_width);
  return {re, im};
}

Expr parse_z(std::string_view source, const ConstantTable& constants) {
  return parse_expression(source, z_vars(), constants);
}

Expr parse_xy(std::string_view source, const ConstantTable& constants) {
  return parse_expression(source, xy_vars(), constants);
}

double min_modulus_on_curve(const Expr& f, const ParametricCurve& curve, int samples) {
  double best = INFINITY;
  const double a = curve.t_start();
  const double b = curve.t_end();
  for (int j = 0; j <= samples; ++j) {
    const double t = j == samples ? b : a + (b - a) * j / samples;
    try {
      best = std::min(best, std::abs(evaluate(f, curve_point(curve, t))));
    } catch (const Error&) {
      return 0.0;
    }
  }
  return best;
}

std::vector<Fixture> standard_corpus(std::uint64_t seed) {
  const auto functions = function_family(seed);
  const auto curves = open_curves();
  std::vector<Fixture> out;
  // Each function meets two curves; a rejected pairing falls through to the
  // next candidate.
  constexpr std::array<std::size_t, 6> kOrder{0, 2, 4, 1, 3, 5};
  for (std::size_t i = 0; i < functions.size(); ++i) {
    int placed = 0;
    for (std::size_t s : kOrder) {
      if (placed == 2) break;
      const NamedCurve& c = curves[(i + s) % curves.size()];
      if (!admissible(functions[i].f, c.curve)) continue;
      out.push_back({functions[i].id + "@" + c.id, functions[i].f, c.curve});
      ++placed;
    }
  }
  return out;
}

std::vector<Fixture> closed_corpus(std::uint64_t seed) {
  const auto functions = function_family(seed);
  const auto curves = closed_curves();
  std::vector<Fixture> out;
  // z on the unit circle is the motivating e^{1/z} loop; e^{z^2} has f* = e^{2z}.
  out.push_back({"z@unit_circle", parse_z("z"), curves[0].curve});
  out.push_back({"expz2@unit_circle", parse_z("exp(z^2)"), curves[0].curve});
  const std::array<std::size_t, 8> picks{0, 2, 3, 7, 9, 10, 8, 12};
  std::size_t k = 0;
  for (std::size_t idx : picks) {
    const NamedFunction& nf = functions[idx];
    for (std::size_t step = 0; step < curves.size(); ++step) {
      const NamedCurve& c = curves[(k + step) % curves.size()];
      if (!admissible(nf.f, c.curve)) continue;
      out.push_back({nf.id + "@" + c.id, nf.f, c.curve});
      break;
    }
    ++k;
  }
  return out;
}

std::vector<PairFixture> product_corpus(std::uint64_t seed) {
  const auto functions = function_family(seed);
  const auto curves = open_curves();
  std::vector<PairFixture> out;
  out.push_back({"one*one@seg_0_1p1i", parse_z("1"), parse_z("1"), curves[0].curve});
  out.push_back({"expquad_exp2z@arc_quarter", parse_z("exp(z^2+1)"), parse_z("exp(2*z)"),
                 curves[3].curve});
  for (std::size_t i = 0; i + 1 < functions.size(); ++i) {
    const NamedFunction& f = functions[i];
    const NamedFunction& g = functions[(i + 5) % functions.size()];
    const NamedCurve& c = curves[(i + 1) % curves.size()];
    if (!admissible(f.f, c.curve) || !admissible(g.f, c.curve)) continue;
    out.push_back({f.id + "*" + g.id + "@" + c.id, f.f, g.f, c.curve});
  }
  return out;
}

std::vector<LineFixture> line_corpus() {
  std::vector<LineFixture> out;
  const auto curves = open_curves();
  const std::array<std::pair<const char*, const char*>, 6> functions{{
      {"exp_x_plus_y", "exp(x+y)"},
      {"seven", "7"},
      {"exp_xy", "exp(x*y)"},
      {"quadratic", "2+x^2+y^2"},
      {"exp_sinx_y", "exp(sin(x)*y)"},
      {"one_plus_exp", "1+exp(x-y)"},
  }};
  for (std::size_t i = 0; i < functions.size(); ++i) {
    for (std::size_t j : {i % curves.size(), (i + 3) % curves.size()}) {
      out.push_back({std::string(functions[i].first) + "@" + curves[j].id,
                     parse_xy(functions[i].second), curves[j].curve});
    }
  }
  return out;
}

}  // namespace mulint
