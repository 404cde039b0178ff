#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mulint/curve.hpp"
#include "mulint/expr.hpp"

namespace mulint {

/// The chosen value of log f(z(a)) is Log f(z(a)) + 2 pi i k0.
struct BranchSelection {
  std::int64_t k0 = 0;
  friend bool operator==(const BranchSelection&, const BranchSelection&) = default;
};

struct RefinementPolicy {
  int initial_samples = 64;  // per segment
  double max_phase_step = 1.5707963267948966;  // pi/2
  int max_depth = 40;
  double unwrap_tol = 1e-3;
};

struct TrackSample {
  double t;
  ComplexValue z;
  ComplexValue f;
  std::int64_t winding;  // theta = Arg f + 2 pi winding
  ComplexValue logval;   // ln|f| + i theta

  double theta() const noexcept { return logval.imag(); }
};

/// Continuous single-valued determination of log f(z(t)) along a curve,
/// sampled on an adaptive grid. Between samples the log is recovered by
/// re-evaluating f and matching its argument to the nearest sample.
class LogTrack {
 public:
  LogTrack(Expr f, ParametricCurve curve, BranchSelection k0, std::vector<TrackSample> samples,
           double zero_tol);

  const Expr& function() const noexcept { return f_; }
  const ParametricCurve& curve() const noexcept { return curve_; }
  BranchSelection branch() const noexcept { return k0_; }
  std::span<const TrackSample> samples() const noexcept { return samples_; }
  double zero_tolerance() const noexcept { return zero_tol_; }

  const TrackSample& front() const { return samples_.front(); }
  const TrackSample& back() const { return samples_.back(); }

  /// Glued log at parameter t (z = z(t) may be supplied to skip re-evaluation).
  ComplexValue log_at(double t) const;
  ComplexValue log_at(double t, ComplexValue z) const;

  /// The same track with every winding shifted by dk (k0 -> k0 + dk).
  LogTrack shifted(std::int64_t dk) const;

 private:
  std::size_t nearest_sample(double t) const;

  Expr f_;
  ParametricCurve curve_;
  BranchSelection k0_;
  std::vector<TrackSample> samples_;
  double zero_tol_;
};

/// Adaptive sampling and phase unwrapping of f along the curve. Throws
/// ZeroOnCurve if |f| <= 1e-12 (1 + max sampled |f|) at any sample and
/// RefinementExhausted if bisection exceeds `policy.max_depth`.
LogTrack build_log_track(const Expr& f, const ParametricCurve& curve, BranchSelection k0 = {},
                         const RefinementPolicy& policy = {});

/// The branch index whose determination at value w equals `theta` (rounded).
BranchSelection branch_matching(ComplexValue w, double theta);

/// output[0] = raw[0]; each later entry moved by the 2 pi multiple nearest
/// to the previous output.
std::vector<double> unwrap_phase(std::span<const double> raw);

struct HalfPlanePartition {
  std::vector<double> breakpoints;  // a = t_0 < ... < t_m = b
  std::vector<double> witness;      // phi_k per interval: Re(f e^{-i phi_k}) > 0 on it

  std::size_t intervals() const noexcept { return witness.size(); }
};

/// Greedy sweep over the unwrapped phase: a piece closes before its phase
/// oscillation reaches pi - margin. Witness directions are verified on the
/// track samples.
HalfPlanePartition half_plane_partition(const LogTrack& track, double margin = 0.1);
HalfPlanePartition half_plane_partition(const Expr& f, const ParametricCurve& curve,
                                        double margin = 0.1);

}  // namespace mulint
