#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mulint/expr.hpp"

namespace mulint {

inline constexpr double kDefaultJointTolerance = 1e-12;

/// One smooth piece z(t) = x(t) + i y(t), t in [t_start, t_end]. The coordinate
/// expressions are in the single variable "t" (slot 0); their derivatives are
/// derived symbolically on construction.
class CurveSegment {
 public:
  CurveSegment(Expr x, Expr y, double t_start, double t_end);

  const Expr& x_expr() const noexcept { return x_; }
  const Expr& y_expr() const noexcept { return y_; }
  const Expr& dx_expr() const noexcept { return dx_; }
  const Expr& dy_expr() const noexcept { return dy_; }
  double t_start() const noexcept { return t0_; }
  double t_end() const noexcept { return t1_; }

  ComplexValue point(double t) const;
  ComplexValue velocity(double t) const;

  /// Same geometry restricted to [a, b] within the segment range.
  CurveSegment restricted(double a, double b) const;

 private:
  Expr x_, y_, dx_, dy_;
  double t0_, t1_;
};

/// Piecewise-smooth curve. Segment parameter ranges abut and the image is
/// continuous at every joint. Simplicity (no self-intersection) is a caller
/// obligation and is not checked.
class ParametricCurve {
 public:
  explicit ParametricCurve(std::vector<CurveSegment> segments, bool closed = false,
                           double joint_tol = kDefaultJointTolerance);

  std::span<const CurveSegment> segments() const noexcept { return segments_; }
  bool closed() const noexcept { return closed_; }
  double t_start() const noexcept { return segments_.front().t_start(); }
  double t_end() const noexcept { return segments_.back().t_end(); }

  std::size_t segment_index(double t) const;

  ComplexValue start_point() const { return segments_.front().point(t_start()); }
  ComplexValue end_point() const { return segments_.back().point(t_end()); }
  /// z(b) - z(a); exactly zero for closed curves.
  ComplexValue displacement() const;

  /// Pieces on [a, c] and [c, b]; requires a < c < b.
  std::pair<ParametricCurve, ParametricCurve> split(double c) const;

  /// Opposite orientation via t -> a + b - t on the same parameter interval.
  ParametricCurve reversed() const;

  /// Chains `next` after this curve, shifting its parameter so ranges abut.
  ParametricCurve then(const ParametricCurve& next, bool closed = false) const;

 private:
  std::vector<CurveSegment> segments_;
  bool closed_;
};

ComplexValue curve_point(const ParametricCurve& curve, double t);

// Builders. All parameter ranges are explicit so pieces can be chained.
ParametricCurve make_segment(ComplexValue from, ComplexValue to);
/// Full positively oriented circle, t in [0, 2 pi].
ParametricCurve make_circle(ComplexValue center, double radius);
/// Arc center + r e^{it}, t in [t0, t1].
ParametricCurve make_arc(ComplexValue center, double radius, double t0, double t1);
/// Straight pieces through the vertices; piece k spans t in [k, k+1].
ParametricCurve make_polyline(std::span<const ComplexValue> vertices, bool closed = false);
ParametricCurve make_parametric(const Expr& x, const Expr& y, double t0, double t1);

}  // namespace mulint
