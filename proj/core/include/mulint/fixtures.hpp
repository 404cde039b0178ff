#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mulint/curve.hpp"
#include "mulint/expr.hpp"

namespace mulint {

inline constexpr std::uint64_t kDefaultFixtureSeed = 0x6d756c696e74ULL;

/// f in the variable "z" along a curve.
struct Fixture {
  std::string id;
  Expr f;
  ParametricCurve curve;
};

struct PairFixture {
  std::string id;
  Expr f;
  Expr g;
  ParametricCurve curve;
};

/// Positive real h in the variables "x", "y".
struct LineFixture {
  std::string id;
  Expr h;
  ParametricCurve curve;
};

/// mt19937_64 with an explicit 53-bit mapping: the engine sequence is fixed by
/// the standard, the distributions are not.
class FixtureRng {
 public:
  explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi);
  ComplexValue complex_in_box(double half_width);

 private:
  std::mt19937_64 engine_;
};

Expr parse_z(std::string_view source, const ConstantTable& constants = {});
Expr parse_xy(std::string_view source, const ConstantTable& constants = {});

/// Minimum |f| over a uniform sample of the curve (0 when f fails to evaluate).
double min_modulus_on_curve(const Expr& f, const ParametricCurve& curve, int samples = 2048);

/// Functions x curves: constants, e^{cz} for 5 random c, e^{e^z}, z, exp of 5
/// random quadratics; segments, arcs, the unit circle and a two-piece
/// polyline. Pairs where f or f* comes within 1e-6 of zero are rejected.
std::vector<Fixture> standard_corpus(std::uint64_t seed = kDefaultFixtureSeed);

/// Closed-curve fixtures (f whose *derivative is integrated around a loop).
std::vector<Fixture> closed_corpus(std::uint64_t seed = kDefaultFixtureSeed);

std::vector<PairFixture> product_corpus(std::uint64_t seed = kDefaultFixtureSeed);

std::vector<LineFixture> line_corpus();

}  // namespace mulint
