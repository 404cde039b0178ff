#include "mulint/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mulint {

namespace {

const std::string kParam = "t";

double real_coordinate(const Expr& e, double t, const char* what) {
  const ComplexValue v = evaluate(e, ComplexValue(t, 0.0));
  if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real()))) {
    std::ostringstream os;
    os << what << " is not real at t = " << t;
    throw Error(ErrorKind::InvalidCurve, os.str());
  }
  return v.real();
}

Expr param() { return Expr::variable(kParam, 0); }

Expr shifted(const Expr& e, double shift) {
  if (shift == 0.0) return e;
  return substitute(e, kParam, param() - Expr::constant(shift));
}

}  // namespace

CurveSegment::CurveSegment(Expr x, Expr y, double t_start, double t_end)
    : x_(std::move(x)),
      y_(std::move(y)),
      dx_(differentiate(x_, kParam)),
      dy_(differentiate(y_, kParam)),
      t0_(t_start),
      t1_(t_end) {
  if (!(std::isfinite(t0_) && std::isfinite(t1_) && t0_ < t1_)) {
    throw Error(ErrorKind::InvalidCurve, "segment requires finite t_start < t_end");
  }
  constexpr int kChecks = 16;
  for (int j = 0; j <= kChecks; ++j) {
    const double t = t0_ + (t1_ - t0_) * j / kChecks;
    try {
      real_coordinate(x_, t, "x(t)");
      real_coordinate(y_, t, "y(t)");
      real_coordinate(dx_, t, "x'(t)");
      real_coordinate(dy_, t, "y'(t)");
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidCurve) throw;
      throw Error(ErrorKind::InvalidCurve, std::string("curve not evaluable: ") + e.what());
    }
  }
}

ComplexValue CurveSegment::point(double t) const {
  return {real_coordinate(x_, t, "x(t)"), real_coordinate(y_, t, "y(t)")};
}

ComplexValue CurveSegment::velocity(double t) const {
  return {real_coordinate(dx_, t, "x'(t)"), real_coordinate(dy_, t, "y'(t)")};
}

CurveSegment CurveSegment::restricted(double a, double b) const {
  if (a < t0_ || b > t1_) throw Error(ErrorKind::ParameterOutOfRange, "restriction outside segment");
  return CurveSegment(x_, y_, a, b);
}

ParametricCurve::ParametricCurve(std::vector<CurveSegment> segments, bool closed,
                                 double joint_tol)
    : segments_(std::move(segments)), closed_(closed) {
  if (segments_.empty()) throw Error(ErrorKind::InvalidCurve, "curve has no segments");
  for (std::size_t k = 1; k < segments_.size(); ++k) {
    const CurveSegment& prev = segments_[k - 1];
    const CurveSegment& next = segments_[k];
    if (prev.t_end() != next.t_start()) {
      throw Error(ErrorKind::InvalidCurve,
                  "segment parameter ranges do not abut at joint " + std::to_string(k));
    }
    if (std::abs(prev.point(prev.t_end()) - next.point(next.t_start())) > joint_tol) {
      throw Error(ErrorKind::InvalidCurve, "curve is discontinuous at joint " + std::to_string(k));
    }
  }
  if (closed_ && std::abs(end_point() - start_point()) > joint_tol) {
    throw Error(ErrorKind::InvalidCurve, "curve marked closed but z(b) != z(a)");
  }
}

std::size_t ParametricCurve::segment_index(double t) const {
  if (!(t >= t_start() && t <= t_end())) {
    std::ostringstream os;
    os << "parameter " << t << " outside [" << t_start() << ", " << t_end() << "]";
    throw Error(ErrorKind::ParameterOutOfRange, os.str());
  }
  auto it = std::lower_bound(segments_.begin(), segments_.end(), t,
                             [](const CurveSegment& s, double v) { return s.t_end() < v; });
  return static_cast<std::size_t>(std::min<std::ptrdiff_t>(
      it - segments_.begin(), static_cast<std::ptrdiff_t>(segments_.size()) - 1));
}

ComplexValue ParametricCurve::displacement() const {
  if (closed_) return {0.0, 0.0};
  return end_point() - start_point();
}

std::pair<ParametricCurve, ParametricCurve> ParametricCurve::split(double c) const {
  if (!(c > t_start() && c < t_end())) {
    throw Error(ErrorKind::ParameterOutOfRange, "split point must lie strictly inside (a, b)");
  }
  std::vector<CurveSegment> left;
  std::vector<CurveSegment> right;
  for (const CurveSegment& s : segments_) {
    if (s.t_end() <= c) {
      left.push_back(s);
    } else if (s.t_start() >= c) {
      right.push_back(s);
    } else {
      left.push_back(s.restricted(s.t_start(), c));
      right.push_back(s.restricted(c, s.t_end()));
    }
  }
  return {ParametricCurve(std::move(left)), ParametricCurve(std::move(right))};
}

ParametricCurve ParametricCurve::reversed() const {
  const double sum = t_start() + t_end();
  const Expr flip = Expr::constant(sum) - param();
  std::vector<CurveSegment> out;
  out.reserve(segments_.size());
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    out.emplace_back(substitute(it->x_expr(), kParam, flip), substitute(it->y_expr(), kParam, flip),
                     sum - it->t_end(), sum - it->t_start());
  }
  // sum - t may not reproduce the abutting endpoints bit-exactly; snap them.
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (out[k].t_start() != out[k - 1].t_end()) {
      out[k] = CurveSegment(out[k].x_expr(), out[k].y_expr(), out[k - 1].t_end(), out[k].t_end());
    }
  }
  return ParametricCurve(std::move(out), closed_);
}

ParametricCurve ParametricCurve::then(const ParametricCurve& next, bool closed) const {
  std::vector<CurveSegment> out(segments_.begin(), segments_.end());
  const double shift = t_end() - next.t_start();
  for (const CurveSegment& s : next.segments()) {
    const double a = out.back().t_end();
    const double b = s.t_end() + shift;
    out.emplace_back(shifted(s.x_expr(), shift), shifted(s.y_expr(), shift), a, b);
  }
  return ParametricCurve(std::move(out), closed);
}

ComplexValue curve_point(const ParametricCurve& curve, double t) {
  return curve.segments()[curve.segment_index(t)].point(t);
}

ParametricCurve make_segment(ComplexValue from, ComplexValue to) {
  const Expr t = param();
  const ComplexValue d = to - from;
  Expr x = Expr::constant(from.real()) + Expr::constant(d.real()) * t;
  Expr y = Expr::constant(from.imag()) + Expr::constant(d.imag()) * t;
  return ParametricCurve({CurveSegment(std::move(x), std::move(y), 0.0, 1.0)});
}

ParametricCurve make_arc(ComplexValue center, double radius, double t0, double t1) {
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidCurve, "arc radius must be positive");
  const Expr t = param();
  Expr x = Expr::constant(center.real()) + Expr::constant(radius) * Expr::cos(t);
  Expr y = Expr::constant(center.imag()) + Expr::constant(radius) * Expr::sin(t);
  return ParametricCurve({CurveSegment(std::move(x), std::move(y), t0, t1)});
}

ParametricCurve make_circle(ComplexValue center, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidCurve, "circle radius must be positive");
  const Expr t = param();
  Expr x = Expr::constant(center.real()) + Expr::constant(radius) * Expr::cos(t);
  Expr y = Expr::constant(center.imag()) + Expr::constant(radius) * Expr::sin(t);
  return ParametricCurve({CurveSegment(std::move(x), std::move(y), 0.0, 2.0 * std::numbers::pi)},
                         true);
}

ParametricCurve make_polyline(std::span<const ComplexValue> vertices, bool closed) {
  if (vertices.size() < 2) throw Error(ErrorKind::InvalidCurve, "polyline needs at least two vertices");
  const Expr t = param();
  std::vector<CurveSegment> segs;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    const ComplexValue p = vertices[k];
    const ComplexValue d = vertices[k + 1] - p;
    const Expr local = k == 0 ? t : t - Expr::constant(static_cast<double>(k));
    Expr x = Expr::constant(p.real()) + Expr::constant(d.real()) * local;
    Expr y = Expr::constant(p.imag()) + Expr::constant(d.imag()) * local;
    segs.emplace_back(std::move(x), std::move(y), static_cast<double>(k),
                      static_cast<double>(k + 1));
  }
  return ParametricCurve(std::move(segs), closed);
}

ParametricCurve make_parametric(const Expr& x, const Expr& y, double t0, double t1) {
  return ParametricCurve({CurveSegment(x, y, t0, t1)});
}

}  // namespace mulint
