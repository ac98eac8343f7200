#pragma once

#include <memory>

#include <Eigen/Dense>

#include "podkit/hilbert_space.hpp"
#include "podkit/time_grid.hpp"

namespace podkit {

/// M+1 snapshot vectors on a uniform time grid, living in one Hilbert space.
/// Columns of values() are the snapshots f_0 .. f_M.
///
/// A periodic trajectory asserts f_M = f_0; difference quotients and discrete
/// norms then wrap indices modulo M instead of shortening the sequence.
class Trajectory {
 public:
  Trajectory(TimeGrid grid, std::shared_ptr<const HilbertSpace> space,
             Eigen::MatrixXd values, bool periodic = false);

  const TimeGrid& grid() const { return grid_; }
  const HilbertSpace& space() const { return *space_; }
  std::shared_ptr<const HilbertSpace> space_ptr() const { return space_; }
  const Eigen::MatrixXd& values() const { return values_; }
  int snapshot_count() const { return static_cast<int>(values_.cols()); }
  Eigen::VectorXd snapshot(int n) const;
  bool periodic() const { return periodic_; }

  /// Same data viewed as a plain (non wrapping) sequence.
  Trajectory as_general() const { return Trajectory(grid_, space_, values_, false); }

  /// Same data on a grid stretched by s > 0.
  Trajectory rescaled_time(double s) const {
    return Trajectory(grid_.rescaled(s), space_, values_, periodic_);
  }

 private:
  TimeGrid grid_;
  std::shared_ptr<const HilbertSpace> space_;
  Eigen::MatrixXd values_;
  bool periodic_;
};

}  // namespace podkit
