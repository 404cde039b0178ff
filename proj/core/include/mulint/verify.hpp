#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mulint/curve.hpp"
#include "mulint/expr.hpp"
#include "mulint/fixtures.hpp"
#include "mulint/quadrature.hpp"

namespace mulint {

struct PropertyReport {
  std::string property;
  int fixtures_run = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> failures;  // (fixture id, residual)

  bool passed() const noexcept { return failures.empty(); }

  /// Folds one fixture's residual into the report.
  void record(const std::string& fixture_id, double residual);
  /// Folds another report (same property) in, in call order.
  void merge(const PropertyReport& other);
};

struct CheckOptions {
  double tolerance = 1e-8;
  std::string fixture_id = "adhoc";
  QuadratureSettings quadrature{};
  std::int64_t n_lo = -3;
  std::int64_t n_hi = 3;
};

/// Relative deviation |w1/w2 - 1| of two values given by their logarithms.
double log_relative_residual(ComplexValue log_a, ComplexValue log_b);

// Each check evaluates one fixture and returns a report with fixtures_run = 1.
// Integrator and tracker errors propagate.

/// Integral of f* = exp(f'/f) against e^{2 pi n dz i} f(z(b)) / f(z(a)). The
/// track of f* is anchored at Im(f'/f)(z(a)) so both sides share the index n.
PropertyReport check_fundamental_theorem(const Expr& f, const ParametricCurve& curve,
                                         const CheckOptions& options = {});

/// Every value of the loop integral of f* equals 1.
PropertyReport check_closed_curve_unity(const Expr& f, const ParametricCurve& curve,
                                        const CheckOptions& options = {});

/// I_n(C) = I_n(C1) I_n(C2), C2 anchored to the terminal branch of C1.
PropertyReport check_concatenation(const Expr& f, const ParametricCurve& curve, double split,
                                   const CheckOptions& options = {});

/// I_{nf}(f) I_{ng}(g) = I_{nf+ng}(fg) and I_{nf}(f) / I_{ng}(g) = I_{nf-ng}(f/g)
/// for nf, ng in [-2, 2] with all tracks sharing the anchor at t = a.
PropertyReport check_product_division(const Expr& f, const Expr& g, const ParametricCurve& curve,
                                      const CheckOptions& options = {});

/// I_n(C) = 1 / I_n(-C) with -C anchored to the terminal branch of C.
PropertyReport check_reversal(const Expr& f, const ParametricCurve& curve,
                              const CheckOptions& options = {});

/// I_n(f)^p = I_{pn}(f^p) for n in [-2, 2] (the inclusion direction only).
PropertyReport check_natural_power(const Expr& f, const ParametricCurve& curve, int p,
                                   const CheckOptions& options = {});

/// Line *integrals of the partial *derivatives of a positive g(x, y) against
/// g(end) / g(start).
PropertyReport check_line_fundamental(const Expr& g, const ParametricCurve& curve,
                                      const CheckOptions& options = {});

enum class Suite { Ftc, Closed, Concat, Product, Reversal, Power, LineFtc };

std::string_view suite_name(Suite suite) noexcept;
/// Accepts all|ftc|closed|concat|product|reversal|power|line-ftc; "all" gives every suite.
std::vector<Suite> parse_suites(std::string_view name);

/// Runs one suite over its fixture corpus; fixtures are visited in corpus order.
PropertyReport run_suite(Suite suite, std::uint64_t seed = kDefaultFixtureSeed,
                         double tolerance = 1e-8);

}  // namespace mulint
