#pragma once

#include "podkit/errors.hpp"

namespace podkit {

/// Uniform partition of [0, T] into M intervals of step tau = T/M.
class TimeGrid {
 public:
  TimeGrid(double duration, int intervals)
      : duration_(duration), intervals_(intervals) {
    if (!(duration > 0.0)) throw InvalidArgument("TimeGrid: duration must be positive");
    if (intervals < 1) throw InvalidArgument("TimeGrid: need at least one interval");
    step_ = duration_ / intervals_;
  }

  double duration() const { return duration_; }
  int intervals() const { return intervals_; }
  int node_count() const { return intervals_ + 1; }
  double step() const { return step_; }
  double node(int n) const { return n * step_; }

  /// Tail duration T_k = (M+1-k) tau for k >= 1; T_0 is the full duration.
  double tail_duration(int k) const {
    if (k == 0) return duration_;
    return (intervals_ + 1 - k) * step_;
  }

  /// Same node count on a stretched interval [0, s*T].
  TimeGrid rescaled(double s) const { return TimeGrid(s * duration_, intervals_); }

 private:
  double duration_;
  int intervals_;
  double step_;
};

inline TimeGrid make_grid(double duration, int intervals) {
  return TimeGrid(duration, intervals);
}

}  // namespace podkit
