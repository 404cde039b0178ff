#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "mulint/errors.hpp"

namespace mulint::test {

inline double rel_err(ComplexValue got, ComplexValue want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

/// Uniform doubles from mt19937_64 without relying on std distributions.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
  }
  ComplexValue in_disc(double radius) {
    for (;;) {
      const ComplexValue z(uniform(-radius, radius), uniform(-radius, radius));
      if (std::abs(z) <= radius) return z;
    }
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mulint::test
