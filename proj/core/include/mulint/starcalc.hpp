#pragma once

#include "mulint/expr.hpp"

namespace mulint {

inline constexpr double kDefaultFdStep = 1e-6;

struct PolarDecomposition {
  double modulus;   // R = |f(z)| > 0
  double argument;  // Theta = Arg f(z) in (-pi, pi]
};

/// f*(z) = exp(f'(z) / f(z)) for an expression f in the variable "z" (slot 0).
/// Throws ZeroValue when |f(z)| <= 1e-12 (1 + |f(z)|).
ComplexValue star_derivative(const Expr& f, ComplexValue z);

/// Same, with a precomputed symbolic derivative.
ComplexValue star_derivative(const Expr& f, const Expr& df, ComplexValue z);

/// Symbolic f* = exp(f'/f) in "z".
Expr star_derivative_expr(const Expr& f);

PolarDecomposition polar_decompose(const Expr& f, ComplexValue z);

enum class Axis { X, Y };

/// exp(d ln g / d axis) for a positive real g(x, y) (slots 0 and 1), by a
/// central difference of ln g with step h. Throws NonPositiveValue when any
/// stencil value is not a positive real.
double real_star_partial(const Expr& g, double x, double y, Axis axis, double h = kDefaultFdStep);

struct CauchyRiemannReport {
  ComplexValue star_value;   // f*(z)
  double modulus_vs_r_x;     // | |f*| - R*_x |
  double modulus_vs_theta_y; // | |f*| - [e^Theta]*_y |
  double argument;           // distance of Theta'_x - Arg f* to nearest multiple of 2 pi
  double cauchy_riemann;     // | Theta'_x + [ln R]'_y |

  double max_residual() const;
};

/// Polar (R, Theta) relations of the complex *derivative checked by finite
/// differences. Theta is unwrapped across the stencil relative to the centre;
/// BranchJump if any stencil point lies more than pi/2 away after unwrapping.
CauchyRiemannReport check_star_cr_relations(const Expr& f, ComplexValue z,
                                            double h = kDefaultFdStep);

}  // namespace mulint
