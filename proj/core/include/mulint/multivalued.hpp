#pragma once

#include <cstdint>
#include <optional>

#include "mulint/errors.hpp"

namespace mulint {

inline constexpr int kMaxRationalDenominator = 64;
inline constexpr double kCardinalityTolerance = 1e-9;
/// exp(w) is refused (OverflowSignal) above this real part.
inline constexpr double kOverflowLogThreshold = 700.0;

struct Cardinality {
  enum class Kind { Single, Finite, Countable };
  Kind kind = Kind::Countable;
  int q = 0;  // number of distinct values when kind == Finite

  static Cardinality single() { return {Kind::Single, 1}; }
  static Cardinality finite(int q) { return {Kind::Finite, q}; }
  static Cardinality countable() { return {Kind::Countable, 0}; }

  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

/// Smallest q <= q_max with |x - p/q| <= tol, found via continued-fraction
/// convergents. Returns (p, q) or nothing.
std::optional<std::pair<std::int64_t, std::int64_t>> rational_approximation(
    double x, int q_max = kMaxRationalDenominator, double tol = kCardinalityTolerance);

Cardinality classify_displacement(ComplexValue delta, int q_max = kMaxRationalDenominator,
                                  double tol = kCardinalityTolerance);

/// The family I_n = exp(2 pi n delta i) * I_0 held intensionally as
/// (log I_0, delta). Nothing infinite is ever materialised.
class MultiValuedIntegral {
 public:
  MultiValuedIntegral(ComplexValue log_principal, ComplexValue delta);

  ComplexValue log_principal() const noexcept { return log_principal_; }
  ComplexValue delta() const noexcept { return delta_; }
  Cardinality cardinality() const noexcept { return cardinality_; }

  /// log I_n = log I_0 + 2 pi n delta i  (one representative of the logarithm).
  ComplexValue log_value(std::int64_t n) const noexcept;

  /// Throws OverflowSignal when the real part of the log exceeds 700.
  ComplexValue principal() const { return value(0); }
  ComplexValue value(std::int64_t n) const;

 private:
  ComplexValue log_principal_;
  ComplexValue delta_;
  Cardinality cardinality_;
};

inline ComplexValue multivalue_at(const MultiValuedIntegral& result, std::int64_t n) {
  return result.value(n);
}

/// exp(w) with the overflow policy applied.
ComplexValue checked_exp(ComplexValue w);

}  // namespace mulint
