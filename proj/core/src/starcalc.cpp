#include "mulint/starcalc.hpp"

#include "mulint/multivalued.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace mulint {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_nonzero(ComplexValue fz) {
  if (std::abs(fz) <= 1e-12 * (1.0 + std::abs(fz))) {
    throw Error(ErrorKind::ZeroValue, "f(z) vanishes; *derivative undefined");
  }
}

double distance_to_2pi_multiple(double v) {
  return std::abs(v - kTwoPi * std::round(v / kTwoPi));
}

}  // namespace

ComplexValue star_derivative(const Expr& f, const Expr& df, ComplexValue z) {
  const ComplexValue fz = evaluate(f, z);
  require_nonzero(fz);
  return checked_exp(evaluate(df, z) / fz);
}

ComplexValue star_derivative(const Expr& f, ComplexValue z) {
  return star_derivative(f, differentiate(f, "z"), z);
}

Expr star_derivative_expr(const Expr& f) { return Expr::exp(differentiate(f, "z") / f); }

PolarDecomposition polar_decompose(const Expr& f, ComplexValue z) {
  const ComplexValue fz = evaluate(f, z);
  require_nonzero(fz);
  return {std::abs(fz), principal_log(fz).imag()};
}

double real_star_partial(const Expr& g, double x, double y, Axis axis, double h) {
  auto ln_g = [&](double px, double py) {
    const std::array<ComplexValue, 2> xy{ComplexValue(px, 0.0), ComplexValue(py, 0.0)};
    const ComplexValue v = evaluate(g, xy);
    if (!(v.real() > 0.0) || std::abs(v.imag()) > 1e-12 * v.real()) {
      throw Error(ErrorKind::NonPositiveValue, "g is not a positive real on the stencil");
    }
    return std::log(v.real());
  };
  const double dx = axis == Axis::X ? h : 0.0;
  const double dy = axis == Axis::Y ? h : 0.0;
  return std::exp((ln_g(x + dx, y + dy) - ln_g(x - dx, y - dy)) / (2.0 * h));
}

double CauchyRiemannReport::max_residual() const {
  return std::max({modulus_vs_r_x, modulus_vs_theta_y, argument, cauchy_riemann});
}

CauchyRiemannReport check_star_cr_relations(const Expr& f, ComplexValue z, double h) {
  const ComplexValue fz = evaluate(f, z);
  require_nonzero(fz);
  const ComplexValue fstar = star_derivative(f, z);
  const double theta0 = std::arg(fz);

  auto sample = [&](double ddx, double ddy) {
    const ComplexValue w = evaluate(f, z + ComplexValue(ddx, ddy));
    require_nonzero(w);
    const double raw = std::arg(w);
    const double theta = raw + kTwoPi * std::round((theta0 - raw) / kTwoPi);
    if (std::abs(theta - theta0) > std::numbers::pi / 2) {
      throw Error(ErrorKind::BranchJump, "phase of f jumps across the difference stencil");
    }
    return std::make_pair(std::log(std::abs(w)), theta);
  };
  const auto [lnr_xp, th_xp] = sample(h, 0.0);
  const auto [lnr_xm, th_xm] = sample(-h, 0.0);
  const auto [lnr_yp, th_yp] = sample(0.0, h);
  const auto [lnr_ym, th_ym] = sample(0.0, -h);

  const double lnr_x = (lnr_xp - lnr_xm) / (2.0 * h);
  const double lnr_y = (lnr_yp - lnr_ym) / (2.0 * h);
  const double theta_x = (th_xp - th_xm) / (2.0 * h);
  const double theta_y = (th_yp - th_ym) / (2.0 * h);

  const double modulus = std::abs(fstar);
  CauchyRiemannReport report{};
  report.star_value = fstar;
  report.modulus_vs_r_x = std::abs(modulus - std::exp(lnr_x));
  report.modulus_vs_theta_y = std::abs(modulus - std::exp(theta_y));
  report.argument = distance_to_2pi_multiple(theta_x - std::arg(fstar));
  report.cauchy_riemann = std::abs(theta_x + lnr_y);
  return report;
}

}  // namespace mulint
