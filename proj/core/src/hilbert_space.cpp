#include "podkit/hilbert_space.hpp"

#include "podkit/errors.hpp"

namespace podkit {

HilbertSpace::HilbertSpace(Kind kind, Eigen::SparseMatrix<double> gram)
    : kind_(kind), gram_(std::move(gram)) {
  if (gram_.rows() < 1 || gram_.rows() != gram_.cols())
    throw InvalidArgument("HilbertSpace: Gram operator must be square and nonempty");
  gram_.makeCompressed();
  // Symmetry is required exactly as stored.
  Eigen::SparseMatrix<double> diff = Eigen::SparseMatrix<double>(gram_.transpose()) - gram_;
  diff.prune(0.0, 0.0);
  if (diff.nonZeros() != 0)
    throw InvalidArgument("HilbertSpace: Gram operator is not symmetric");
}

HilbertSpace HilbertSpace::euclidean(int dim) {
  if (dim < 1) throw InvalidArgument("HilbertSpace: dimension must be positive");
  Eigen::SparseMatrix<double> id(dim, dim);
  id.setIdentity();
  return HilbertSpace(Kind::identity, std::move(id));
}

double HilbertSpace::inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw InvalidArgument("HilbertSpace::inner: dimension mismatch");
  if (is_identity()) return u.dot(v);
  return u.dot(gram_ * v);
}

double HilbertSpace::norm(const Eigen::VectorXd& u) const {
  double q = inner(u, u);
  // Roundoff can leave a tiny negative quadratic form on near-null vectors.
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

Eigen::VectorXd HilbertSpace::apply(const Eigen::VectorXd& u) const {
  if (u.size() != dim()) throw InvalidArgument("HilbertSpace::apply: dimension mismatch");
  if (is_identity()) return u;
  return gram_ * u;
}

Eigen::MatrixXd HilbertSpace::apply(const Eigen::MatrixXd& columns) const {
  if (columns.rows() != dim()) throw InvalidArgument("HilbertSpace::apply: dimension mismatch");
  if (is_identity()) return columns;
  return gram_ * columns;
}

const char* gram_kind_name(HilbertSpace::Kind kind) {
  switch (kind) {
    case HilbertSpace::Kind::identity: return "identity";
    case HilbertSpace::Kind::mass: return "mass";
    case HilbertSpace::Kind::stiffness: return "stiffness";
  }
  return "unknown";
}

HilbertSpace::Kind gram_kind_from_name(const std::string& name) {
  if (name == "identity") return HilbertSpace::Kind::identity;
  if (name == "mass") return HilbertSpace::Kind::mass;
  if (name == "stiffness") return HilbertSpace::Kind::stiffness;
  throw InvalidArgument("unknown Gram kind: " + name);
}

std::shared_ptr<const HilbertSpace> make_euclidean_space(int dim) {
  return std::make_shared<const HilbertSpace>(HilbertSpace::euclidean(dim));
}

std::shared_ptr<const HilbertSpace> make_space(HilbertSpace::Kind kind,
                                               Eigen::SparseMatrix<double> gram) {
  return std::make_shared<const HilbertSpace>(kind, std::move(gram));
}

}  // namespace podkit
