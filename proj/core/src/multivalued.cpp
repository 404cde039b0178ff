#include "mulint/multivalued.hpp"

#include <cmath>
#include <numbers>

namespace mulint {

std::optional<std::pair<std::int64_t, std::int64_t>> rational_approximation(double x, int q_max,
                                                                            double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h_k/k_k of the continued fraction of x.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (k > q_max) return std::nullopt;
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) {
      return std::make_pair(h, k);
    }
    if (frac == 0.0) return std::nullopt;
    const double inv = 1.0 / frac;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    frac = inv - static_cast<double>(a);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

Cardinality classify_displacement(ComplexValue delta, int q_max, double tol) {
  if (std::abs(delta.imag()) > tol) return Cardinality::countable();
  const auto pq = rational_approximation(delta.real(), q_max, tol);
  if (!pq) return Cardinality::countable();
  if (pq->second == 1) return Cardinality::single();
  return Cardinality::finite(static_cast<int>(pq->second));
}

ComplexValue checked_exp(ComplexValue w) {
  if (!(w.real() <= kOverflowLogThreshold)) throw OverflowSignal(w);
  return std::exp(w);
}

MultiValuedIntegral::MultiValuedIntegral(ComplexValue log_principal, ComplexValue delta)
    : log_principal_(log_principal), delta_(delta), cardinality_(classify_displacement(delta)) {}

ComplexValue MultiValuedIntegral::log_value(std::int64_t n) const noexcept {
  const double two_pi_n = 2.0 * std::numbers::pi * static_cast<double>(n);
  // 2 pi n delta i = 2 pi n (-Im delta + i Re delta)
  return log_principal_ + ComplexValue(-two_pi_n * delta_.imag(), two_pi_n * delta_.real());
}

ComplexValue MultiValuedIntegral::value(std::int64_t n) const { return checked_exp(log_value(n)); }

}  // namespace mulint
