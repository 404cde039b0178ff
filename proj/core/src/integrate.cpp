#include "mulint/integrate.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace mulint {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_converged(const QuadratureResult& r, const char* what) {
  if (!r.converged) {
    throw ToleranceNotMet(r.value, r.est_error,
                          std::string(what) + ": quadrature tolerance not met at max depth");
  }
}

// Neumaier-compensated accumulation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

QuadratureResult contour_integral(const CurveIntegrand& g, const ParametricCurve& curve,
                                  const QuadratureSettings& settings) {
  QuadratureResult total;
  for (const CurveSegment& seg : curve.segments()) {
    auto integrand = [&](double t) {
      const ComplexValue z = seg.point(t);
      return g(t, z) * seg.velocity(t);
    };
    total += integrate_interval(integrand, seg.t_start(), seg.t_end(), settings);
  }
  return total;
}

QuadratureResult contour_integral(const LogTrack& track, const QuadratureSettings& settings) {
  return contour_integral([&](double t, ComplexValue z) { return track.log_at(t, z); },
                          track.curve(), settings);
}

QuadratureResult line_integral(const std::function<double(double, double)>& h,
                               const ParametricCurve& curve, Differential differential,
                               const QuadratureSettings& settings) {
  QuadratureResult total;
  for (const CurveSegment& seg : curve.segments()) {
    auto integrand = [&](double t) -> ComplexValue {
      const ComplexValue z = seg.point(t);
      const ComplexValue v = seg.velocity(t);
      const double weight = differential == Differential::Dx   ? v.real()
                            : differential == Differential::Dy ? v.imag()
                                                               : std::abs(v);
      return h(z.real(), z.imag()) * weight;
    };
    total += integrate_interval(integrand, seg.t_start(), seg.t_end(), settings);
  }
  return total;
}

double line_star_integral(const std::function<double(double, double)>& h,
                          const ParametricCurve& curve, Differential differential,
                          const QuadratureSettings& settings) {
  auto ln_h = [&](double x, double y) {
    const double v = h(x, y);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::NonPositiveValue, "line *integrand is not positive at (" +
                                                   std::to_string(x) + ", " + std::to_string(y) +
                                                   ")");
    }
    return std::log(v);
  };
  const QuadratureResult r = line_integral(ln_h, curve, differential, settings);
  require_converged(r, "line *integral");
  const double exponent = r.value.real();
  if (exponent > kOverflowLogThreshold) throw OverflowSignal(ComplexValue(exponent, 0.0));
  return std::exp(exponent);
}

double line_star_integral(const Expr& h, const ParametricCurve& curve, Differential differential,
                          const QuadratureSettings& settings) {
  auto hv = [&](double x, double y) {
    const std::array<ComplexValue, 2> xy{ComplexValue(x, 0.0), ComplexValue(y, 0.0)};
    const ComplexValue v = evaluate(h, xy);
    if (std::abs(v.imag()) > 1e-12 * std::abs(v.real())) {
      throw Error(ErrorKind::NonPositiveValue, "line *integrand is not real");
    }
    return v.real();
  };
  return line_star_integral(hv, curve, differential, settings);
}

StarIntegralResult star_integral(const LogTrack& track, const QuadratureSettings& settings) {
  const QuadratureResult q = contour_integral(track, settings);
  require_converged(q, "*integral");
  return {MultiValuedIntegral(q.value, track.curve().displacement()), q};
}

StarIntegralResult star_integral(const Expr& f, const ParametricCurve& curve, BranchSelection k0,
                                 const QuadratureSettings& settings,
                                 const RefinementPolicy& policy) {
  return star_integral(build_log_track(f, curve, k0, policy), settings);
}

ComplexValue cartesian_log_value(const LogTrack& track, std::int64_t n,
                                 const QuadratureSettings& settings) {
  const double shift = kTwoPi * static_cast<double>(n);
  // One real line integral per term; the curve point is recovered from (x, y).
  auto ln_r = [&](double x, double y) {
    const ComplexValue z(x, y);
    return std::log(std::abs(evaluate(track.function(), z)));
  };
  // Theta needs the parameter for nearest-sample matching, so integrate over t directly.
  auto theta_integral = [&](Differential d) {
    QuadratureResult total;
    for (const CurveSegment& seg : track.curve().segments()) {
      auto integrand = [&](double t) -> ComplexValue {
        const ComplexValue z = seg.point(t);
        const ComplexValue v = seg.velocity(t);
        const double weight = d == Differential::Dx ? v.real() : v.imag();
        return (track.log_at(t, z).imag() + shift) * weight;
      };
      total += integrate_interval(integrand, seg.t_start(), seg.t_end(), settings);
    }
    return total;
  };
  const QuadratureResult lnr_dx = line_integral(ln_r, track.curve(), Differential::Dx, settings);
  const QuadratureResult lnr_dy = line_integral(ln_r, track.curve(), Differential::Dy, settings);
  const QuadratureResult th_dx = theta_integral(Differential::Dx);
  const QuadratureResult th_dy = theta_integral(Differential::Dy);
  for (const auto* r : {&lnr_dx, &lnr_dy, &th_dx, &th_dy}) require_converged(*r, "cartesian *integral");

  // |I_n| = exp(int ln R dx - int (Theta + 2 pi n) dy)
  // arg I_n = int (Theta + 2 pi n) dx + int ln R dy
  const double log_modulus = lnr_dx.value.real() - th_dy.value.real();
  const double argument = th_dx.value.real() + lnr_dy.value.real();
  return {log_modulus, argument};
}

ComplexValue star_integral_via_cartesian(const Expr& f, const ParametricCurve& curve,
                                         std::int64_t n, BranchSelection k0,
                                         const QuadratureSettings& settings) {
  return checked_exp(cartesian_log_value(build_log_track(f, curve, k0), n, settings));
}

ComplexValue riemann_log_sum(const LogTrack& track, std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "partition count m must be >= 1");
  const ParametricCurve& curve = track.curve();
  const double a = curve.t_start();
  const double b = curve.t_end();
  auto node = [&](std::int64_t k) {
    return k == m ? b : a + (b - a) * static_cast<double>(k) / static_cast<double>(m);
  };
  CompensatedSum re, im;
  double t_prev = node(0);
  ComplexValue z_prev = curve_point(curve, t_prev);
  for (std::int64_t k = 1; k <= m; ++k) {
    const double t_next = node(k);
    const ComplexValue z_next = curve_point(curve, t_next);
    const double t_mid = 0.5 * (t_prev + t_next);
    const ComplexValue term = track.log_at(t_mid) * (z_next - z_prev);
    re.add(term.real());
    im.add(term.imag());
    t_prev = t_next;
    z_prev = z_next;
  }
  return {re.value(), im.value()};
}

ComplexValue riemann_star_product(const Expr& f, const ParametricCurve& curve, BranchSelection k0,
                                  std::int64_t m) {
  return checked_exp(riemann_log_sum(build_log_track(f, curve, k0), m));
}

}  // namespace mulint
