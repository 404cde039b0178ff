#pragma once

#include <functional>

#include "mulint/errors.hpp"

namespace mulint {

struct QuadratureSettings {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 40;

  void validate() const;
};

struct QuadratureResult {
  ComplexValue value{};
  double est_error = 0.0;
  int panels = 0;
  bool converged = true;

  QuadratureResult& operator+=(const QuadratureResult& other);
};

/// Adaptive 16-point Gauss-Legendre on [a, b] with bisection.
///
/// A panel is accepted when its single-panel estimate and the sum over its two
/// halves agree within its share (width / total width) of
/// max(abs_tol, rel_tol * |coarse estimate|). Panels are visited and summed in
/// ascending order so results are bit-reproducible. Panels that reach
/// max_depth are accepted anyway and clear `converged`.
QuadratureResult integrate_interval(const std::function<ComplexValue(double)>& g, double a,
                                    double b, const QuadratureSettings& settings = {});

}  // namespace mulint
