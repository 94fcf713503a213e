#pragma once

#include "liefol/lie_core.hpp"

#include <cstddef>
#include <vector>

namespace liefol {

/// Symmetric bilinear form g on an algebra, in the algebra's coordinates.
///
/// The lower triangle is a mirror of the upper one, so the stored matrix is
/// exactly symmetric. Non-degeneracy is checked on demand (signature()).
class MetricTensor {
 public:
  MetricTensor() = default;
  /// Throws InputError if `matrix` is not square or is asymmetric beyond
  /// tol * max(1, max|g|).
  explicit MetricTensor(const Eigen::MatrixXd& matrix, double tol = kDefaultTol);

  static MetricTensor identity(std::size_t dim);

  const Eigen::MatrixXd& matrix() const { return g_; }
  std::size_t dim() const { return static_cast<std::size_t>(g_.rows()); }
  double operator()(const Vector& u, const Vector& v) const { return u.dot(g_ * v); }

 private:
  Eigen::MatrixXd g_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Counts of positive and negative eigenvalues. Throws DegenerateMetricError
/// when an eigenvalue lies within tol * max(1, |lambda|_max) of zero.
Signature signature(const MetricTensor& metric, double tol = kDefaultTol);

/// Basis adapted to a metric: change.col(a) is the a-th frame vector in the
/// original coordinates and g(f_a, f_b) = causalities[a] * delta_ab.
struct OrthonormalFrame {
  LinearMap change;
  std::vector<int> causalities;

  std::size_t size() const { return causalities.size(); }
  Vector column(std::size_t a) const { return change.col(static_cast<Eigen::Index>(a)); }
};

/// Gram-Schmidt for indefinite forms with greedy pivoting.
///
/// At every step the remaining seed vectors are projected off the frame built
/// so far and the one with the largest |g(v,v)| is normalised next. When every
/// remaining candidate is null but two of them pair non-trivially, their sum
/// (or difference) is used instead. Throws DegenerateMetricError when the form
/// is degenerate on the span of `seed` (or the seed columns are dependent).
OrthonormalFrame orthonormal_frame(const MetricTensor& metric, const LinearMap& seed,
                                   double tol = kDefaultTol);

/// Gram matrix of the columns of `subspace` under g.
MetricTensor restrict(const MetricTensor& metric, const LinearMap& subspace);

struct CartanInvolution {
  Eigen::MatrixXd matrix;
};

struct InvolutionCheck {
  double involution_residual = 0.0;   // max |theta^2 - I|
  double automorphism_residual = 0.0; // max |theta[e_i,e_j] - [theta e_i, theta e_j]|
  double min_eigenvalue = 0.0;        // of the form -B(., theta .)
  bool valid = false;
};

InvolutionCheck check_cartan_involution(const LieAlgebra& algebra, const CartanInvolution& theta,
                                        double tol = kDefaultTol);

/// g(u, v) = -B(u, theta v). Throws InvalidInvolutionError if theta is not an
/// involutive automorphism or the result is not positive definite.
MetricTensor cartan_killing_metric(const LieAlgebra& algebra, const CartanInvolution& theta,
                                   double tol = kDefaultTol);

/// The metric whose matrix in `frame` is diag(eps), where `frame` is
/// g-orthonormal for a positive-definite g. Throws InputError when the frame
/// is not orthonormal for g or eps has entries other than +-1.
MetricTensor g_epsilon(const MetricTensor& metric, const OrthonormalFrame& frame,
                       const std::vector<int>& eps, double tol = kDefaultTol);

}  // namespace liefol
