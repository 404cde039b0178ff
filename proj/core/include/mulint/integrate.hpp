#pragma once

#include <cstdint>
#include <functional>

#include "mulint/branch.hpp"
#include "mulint/curve.hpp"
#include "mulint/multivalued.hpp"
#include "mulint/quadrature.hpp"

namespace mulint {

enum class Differential { Dx, Dy, Ds };

/// Integrand of the contour integral, given the parameter and the curve point.
using CurveIntegrand = std::function<ComplexValue(double t, ComplexValue z)>;

/// Integral of g(t) z'(t) dt over [a, b], segment by segment in ascending
/// order. Never throws on tolerance; inspect `converged`.
QuadratureResult contour_integral(const CurveIntegrand& g, const ParametricCurve& curve,
                                  const QuadratureSettings& settings = {});

/// Integral of the glued logarithm carried by `track` along its curve.
QuadratureResult contour_integral(const LogTrack& track, const QuadratureSettings& settings = {});

/// Real line integral of h(x, y) in dx, dy or ds.
QuadratureResult line_integral(const std::function<double(double, double)>& h,
                               const ParametricCurve& curve, Differential differential,
                               const QuadratureSettings& settings = {});

/// exp of the line integral of ln h; h must be positive at every node
/// (NonPositiveValue otherwise). Throws ToleranceNotMet on non-convergence.
double line_star_integral(const std::function<double(double, double)>& h,
                          const ParametricCurve& curve, Differential differential,
                          const QuadratureSettings& settings = {});
/// h is an expression in x (slot 0) and y (slot 1).
double line_star_integral(const Expr& h, const ParametricCurve& curve, Differential differential,
                          const QuadratureSettings& settings = {});

struct StarIntegralResult {
  MultiValuedIntegral integral;
  QuadratureResult quadrature;
};

/// exp of the contour integral of the glued log of f, together with the
/// endpoint displacement that generates the rest of the value family.
/// Throws ZeroOnCurve, RefinementExhausted, ToleranceNotMet.
StarIntegralResult star_integral(const LogTrack& track, const QuadratureSettings& settings = {});
StarIntegralResult star_integral(const Expr& f, const ParametricCurve& curve,
                                 BranchSelection k0 = {}, const QuadratureSettings& settings = {},
                                 const RefinementPolicy& policy = {});

/// log I_n assembled from four real line integrals of ln R and Theta + 2 pi n
/// in dx and dy, with R and Theta read from the track.
ComplexValue cartesian_log_value(const LogTrack& track, std::int64_t n,
                                 const QuadratureSettings& settings = {});
ComplexValue star_integral_via_cartesian(const Expr& f, const ParametricCurve& curve,
                                         std::int64_t n, BranchSelection k0 = {},
                                         const QuadratureSettings& settings = {});

/// log of the integral product over a uniform m-piece parameter partition,
/// midpoint tags and the glued log of the track.
ComplexValue riemann_log_sum(const LogTrack& track, std::int64_t m);
ComplexValue riemann_star_product(const Expr& f, const ParametricCurve& curve, BranchSelection k0,
                                  std::int64_t m);

}  // namespace mulint
