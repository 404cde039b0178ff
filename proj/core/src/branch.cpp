#include "mulint/branch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mulint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t nearest_winding(double reference_theta, double raw_arg) {
  return static_cast<std::int64_t>(std::llround((reference_theta - raw_arg) / kTwoPi));
}

TrackSample make_sample(double t, ComplexValue z, ComplexValue f, std::int64_t winding) {
  const double theta = std::arg(f) + kTwoPi * static_cast<double>(winding);
  return {t, z, f, winding, ComplexValue(std::log(std::abs(f)), theta)};
}

ComplexValue principal_arg_input(ComplexValue f) {
  // Arg(-x - 0i) is +pi by convention.
  return f.imag() == 0.0 ? ComplexValue(f.real(), 0.0) : f;
}

class TrackBuilder {
 public:
  TrackBuilder(const Expr& f, const RefinementPolicy& policy) : f_(f), policy_(policy) {}

  std::vector<TrackSample> samples;
  double zero_tol = 0.0;

  ComplexValue eval(const CurveSegment& seg, double t, ComplexValue& z) const {
    z = seg.point(t);
    const ComplexValue w = principal_arg_input(evaluate(f_, z));
    if (std::abs(w) <= zero_tol) {
      std::ostringstream os;
      os << "f vanishes on the curve near t = " << t << " (|f| = " << std::abs(w) << ")";
      throw Error(ErrorKind::ZeroOnCurve, os.str());
    }
    return w;
  }

  void refine(const CurveSegment& seg, double tl, double tr, int depth) {
    const TrackSample& left = samples.back();
    const double tm = 0.5 * (tl + tr);
    ComplexValue zm, zr;
    const ComplexValue fm = eval(seg, tm, zm);
    const ComplexValue fr = eval(seg, tr, zr);
    const std::int64_t wm = nearest_winding(left.theta(), std::arg(fm));
    const double theta_m = std::arg(fm) + kTwoPi * static_cast<double>(wm);
    const std::int64_t wr = nearest_winding(theta_m, std::arg(fr));
    const double theta_r = std::arg(fr) + kTwoPi * static_cast<double>(wr);
    const double theta_l = left.theta();

    const bool steps_ok = std::abs(theta_m - theta_l) < policy_.max_phase_step &&
                          std::abs(theta_r - theta_m) < policy_.max_phase_step &&
                          std::abs(theta_r - theta_l) < policy_.max_phase_step;
    const bool linear_ok = std::abs(theta_m - 0.5 * (theta_l + theta_r)) <= policy_.unwrap_tol;
    if (steps_ok && linear_ok) {
      samples.push_back(make_sample(tr, zr, fr, wr));
      return;
    }
    if (depth >= policy_.max_depth || !(tl < tm && tm < tr)) {
      std::ostringstream os;
      os << "phase refinement exhausted near t = " << tm
         << " (near-zero of f or insufficient smoothness)";
      throw Error(ErrorKind::RefinementExhausted, os.str());
    }
    refine(seg, tl, tm, depth + 1);
    refine(seg, tm, tr, depth + 1);
  }

 private:
  const Expr& f_;
  const RefinementPolicy& policy_;
};

}  // namespace

LogTrack::LogTrack(Expr f, ParametricCurve curve, BranchSelection k0,
                   std::vector<TrackSample> samples, double zero_tol)
    : f_(std::move(f)),
      curve_(std::move(curve)),
      k0_(k0),
      samples_(std::move(samples)),
      zero_tol_(zero_tol) {
  if (samples_.empty()) throw Error(ErrorKind::InvalidArgument, "log track has no samples");
}

std::size_t LogTrack::nearest_sample(double t) const {
  auto it = std::lower_bound(samples_.begin(), samples_.end(), t,
                             [](const TrackSample& s, double v) { return s.t < v; });
  if (it == samples_.begin()) return 0;
  if (it == samples_.end()) return samples_.size() - 1;
  const auto hi = static_cast<std::size_t>(it - samples_.begin());
  return (t - samples_[hi - 1].t <= samples_[hi].t - t) ? hi - 1 : hi;
}

ComplexValue LogTrack::log_at(double t) const { return log_at(t, curve_point(curve_, t)); }

ComplexValue LogTrack::log_at(double t, ComplexValue z) const {
  const ComplexValue w = principal_arg_input(evaluate(f_, z));
  if (std::abs(w) <= zero_tol_) {
    throw Error(ErrorKind::ZeroOnCurve, "f vanishes on the curve at t = " + std::to_string(t));
  }
  const TrackSample& near = samples_[nearest_sample(t)];
  const double raw = std::arg(w);
  const double theta = raw + kTwoPi * static_cast<double>(nearest_winding(near.theta(), raw));
  return {std::log(std::abs(w)), theta};
}

LogTrack LogTrack::shifted(std::int64_t dk) const {
  std::vector<TrackSample> out = samples_;
  for (TrackSample& s : out) s = make_sample(s.t, s.z, s.f, s.winding + dk);
  return LogTrack(f_, curve_, BranchSelection{k0_.k0 + dk}, std::move(out), zero_tol_);
}

LogTrack build_log_track(const Expr& f, const ParametricCurve& curve, BranchSelection k0,
                         const RefinementPolicy& policy) {
  if (policy.initial_samples < 1 || policy.max_depth < 0) {
    throw Error(ErrorKind::InvalidArgument, "invalid refinement policy");
  }
  TrackBuilder builder(f, policy);

  // Scale for zero detection from the initial grid.
  double max_abs = 0.0;
  for (const CurveSegment& seg : curve.segments()) {
    for (int j = 0; j <= policy.initial_samples; ++j) {
      const double t =
          seg.t_start() + (seg.t_end() - seg.t_start()) * j / policy.initial_samples;
      max_abs = std::max(max_abs, std::abs(evaluate(f, seg.point(t))));
    }
  }
  builder.zero_tol = 1e-12 * (1.0 + max_abs);

  const CurveSegment& first = curve.segments().front();
  ComplexValue z0;
  const ComplexValue f0 = builder.eval(first, first.t_start(), z0);
  builder.samples.push_back(make_sample(first.t_start(), z0, f0, k0.k0));

  for (const CurveSegment& seg : curve.segments()) {
    const int n = policy.initial_samples;
    for (int j = 0; j < n; ++j) {
      const double tl = seg.t_start() + (seg.t_end() - seg.t_start()) * j / n;
      const double tr = j + 1 == n ? seg.t_end()
                                   : seg.t_start() + (seg.t_end() - seg.t_start()) * (j + 1) / n;
      builder.refine(seg, tl, tr, 0);
    }
  }
  return LogTrack(f, curve, k0, std::move(builder.samples), builder.zero_tol);
}

BranchSelection branch_matching(ComplexValue w, double theta) {
  return {nearest_winding(theta, std::arg(principal_arg_input(w)))};
}

std::vector<double> unwrap_phase(std::span<const double> raw) {
  std::vector<double> out(raw.begin(), raw.end());
  for (std::size_t j = 1; j < out.size(); ++j) {
    out[j] = raw[j] + kTwoPi * std::round((out[j - 1] - raw[j]) / kTwoPi);
  }
  return out;
}

HalfPlanePartition half_plane_partition(const LogTrack& track, double margin) {
  if (!(margin > 0.0 && margin < kPi)) {
    throw Error(ErrorKind::InvalidArgument, "margin must lie in (0, pi)");
  }
  const auto s = track.samples();
  HalfPlanePartition out;
  out.breakpoints.push_back(s.front().t);
  std::size_t piece_start = 0;
  double lo = s.front().theta();
  double hi = lo;
  for (std::size_t j = 1; j < s.size(); ++j) {
    const double th = s[j].theta();
    const double new_lo = std::min(lo, th);
    const double new_hi = std::max(hi, th);
    if (new_hi - new_lo >= kPi - margin && j - 1 > piece_start) {
      out.breakpoints.push_back(s[j - 1].t);
      out.witness.push_back(0.5 * (lo + hi));
      piece_start = j - 1;
      lo = std::min(s[j - 1].theta(), th);
      hi = std::max(s[j - 1].theta(), th);
    } else {
      lo = new_lo;
      hi = new_hi;
    }
  }
  if (s.size() == 1 || out.breakpoints.back() != s.back().t) {
    out.breakpoints.push_back(s.back().t);
    out.witness.push_back(0.5 * (lo + hi));
  }

  // Witness property on the sample grid.
  std::size_t k = 0;
  for (const TrackSample& sample : s) {
    while (k + 1 < out.witness.size() && sample.t > out.breakpoints[k + 1]) ++k;
    const double phi = out.witness[k];
    if (!((sample.f * std::polar(1.0, -phi)).real() > 0.0)) {
      throw Error(ErrorKind::RefinementExhausted,
                  "half-plane witness violated at t = " + std::to_string(sample.t));
    }
  }
  return out;
}

HalfPlanePartition half_plane_partition(const Expr& f, const ParametricCurve& curve,
                                        double margin) {
  return half_plane_partition(build_log_track(f, curve), margin);
}

}  // namespace mulint
