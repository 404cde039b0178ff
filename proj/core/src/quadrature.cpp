#include "mulint/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace mulint {

namespace {

constexpr int kOrder = 16;

struct GaussLegendre {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};

  GaussLegendre() {
    // Newton iteration on P_n from the Chebyshev initial guess.
    for (int i = 0; i < kOrder; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= kOrder; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-17) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussLegendre& rule() {
  static const GaussLegendre gl;
  return gl;
}

ComplexValue panel(const std::function<ComplexValue(double)>& g, double a, double b) {
  const GaussLegendre& gl = rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  ComplexValue sum{};
  for (int i = 0; i < kOrder; ++i) sum += gl.weights[i] * g(mid + half * gl.nodes[i]);
  return half * sum;
}

struct Adaptive {
  const std::function<ComplexValue(double)>& g;
  double budget_per_width;
  int max_depth;
  QuadratureResult acc;

  void run(double a, double b, ComplexValue whole, int depth) {
    const double m = 0.5 * (a + b);
    const ComplexValue left = panel(g, a, m);
    const ComplexValue right = panel(g, m, b);
    const ComplexValue halves = left + right;
    const double err = std::abs(whole - halves);
    const double allowed = budget_per_width * (b - a);
    if (err <= allowed || depth >= max_depth || !(a < m && m < b)) {
      if (err > allowed) acc.converged = false;
      acc.value += halves;
      acc.est_error += err;
      acc.panels += 1;
      return;
    }
    run(a, m, left, depth + 1);
    run(m, b, right, depth + 1);
  }
};

}  // namespace

void QuadratureSettings::validate() const {
  if (!(abs_tol > 0.0 && rel_tol > 0.0) || max_depth < 1) {
    throw Error(ErrorKind::InvalidArgument, "quadrature tolerances must be > 0 and max_depth >= 1");
  }
}

QuadratureResult& QuadratureResult::operator+=(const QuadratureResult& other) {
  value += other.value;
  est_error += other.est_error;
  panels += other.panels;
  converged = converged && other.converged;
  return *this;
}

QuadratureResult integrate_interval(const std::function<ComplexValue(double)>& g, double a,
                                    double b, const QuadratureSettings& settings) {
  settings.validate();
  if (!(a < b)) throw Error(ErrorKind::InvalidArgument, "integration interval must have a < b");
  // Coarse pass over 4 panels sets the relative scale.
  constexpr int kInitial = 4;
  std::array<ComplexValue, kInitial> coarse{};
  std::array<double, kInitial + 1> edges{};
  for (int k = 0; k <= kInitial; ++k) edges[k] = k == kInitial ? b : a + (b - a) * k / kInitial;
  ComplexValue total{};
  for (int k = 0; k < kInitial; ++k) {
    coarse[k] = panel(g, edges[k], edges[k + 1]);
    total += coarse[k];
  }
  const double budget = std::max(settings.abs_tol, settings.rel_tol * std::abs(total));
  Adaptive ad{g, budget / (b - a), settings.max_depth, {}};
  ad.acc.value = {};
  for (int k = 0; k < kInitial; ++k) ad.run(edges[k], edges[k + 1], coarse[k], 1);
  return ad.acc;
}

}  // namespace mulint
