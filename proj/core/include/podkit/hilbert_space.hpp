#pragma once

#include <memory>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace podkit {

/// Finite-dimensional inner-product space defined by a symmetric positive
/// definite Gram operator. The three kinds mirror the products this toolkit
/// works in: the Euclidean one, the FE mass matrix (L2) and the FE stiffness
/// matrix (H1_0 seminorm on the free dofs).
class HilbertSpace {
 public:
  enum class Kind { identity, mass, stiffness };

  HilbertSpace(Kind kind, Eigen::SparseMatrix<double> gram);

  static HilbertSpace euclidean(int dim);

  int dim() const { return static_cast<int>(gram_.rows()); }
  Kind kind() const { return kind_; }
  bool is_identity() const { return kind_ == Kind::identity; }
  const Eigen::SparseMatrix<double>& gram() const { return gram_; }

  double inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  double norm(const Eigen::VectorXd& u) const;

  /// G * u.
  Eigen::VectorXd apply(const Eigen::VectorXd& u) const;
  /// G * U, column-wise.
  Eigen::MatrixXd apply(const Eigen::MatrixXd& columns) const;

 private:
  Kind kind_;
  Eigen::SparseMatrix<double> gram_;
};

const char* gram_kind_name(HilbertSpace::Kind kind);
HilbertSpace::Kind gram_kind_from_name(const std::string& name);

std::shared_ptr<const HilbertSpace> make_euclidean_space(int dim);
std::shared_ptr<const HilbertSpace> make_space(HilbertSpace::Kind kind,
                                               Eigen::SparseMatrix<double> gram);

}  // namespace podkit
