#include "podkit/trajectory.hpp"

#include "podkit/errors.hpp"

namespace podkit {

Trajectory::Trajectory(TimeGrid grid, std::shared_ptr<const HilbertSpace> space,
                       Eigen::MatrixXd values, bool periodic)
    : grid_(grid), space_(std::move(space)), values_(std::move(values)), periodic_(periodic) {
  if (!space_) throw InvalidArgument("Trajectory: null space");
  if (values_.cols() != grid_.node_count())
    throw InvalidArgument("Trajectory: snapshot count must equal node count");
  if (values_.rows() != space_->dim())
    throw InvalidArgument("Trajectory: snapshot length must equal space dimension");
  if (periodic_) {
    double scale = 0.0;
    for (int n = 0; n < values_.cols(); ++n)
      scale = std::max(scale, space_->norm(values_.col(n)));
    double gap = space_->norm(values_.col(values_.cols() - 1) - values_.col(0));
    if (gap > 1e-12 * scale)
      throw InvalidArgument("Trajectory: periodic flag set but f_M != f_0");
  }
}

Eigen::VectorXd Trajectory::snapshot(int n) const {
  if (n < 0 || n >= snapshot_count())
    throw InvalidArgument("Trajectory::snapshot: index out of range");
  return values_.col(n);
}

}  // namespace podkit
