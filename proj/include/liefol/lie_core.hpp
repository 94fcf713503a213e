#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace liefol {

/// Coordinates of an algebra element in the algebra's basis.
using Vector = Eigen::VectorXd;
/// Square matrix acting on coordinates; column k is the image of basis vector k.
using LinearMap = Eigen::MatrixXd;

inline constexpr double kDefaultTol = 1e-9;

/// One structure constant c^k_{ij} with i < j: [e_i, e_j] has coefficient `value` on e_k.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  double value = 0.0;
};

/// Finite-dimensional real Lie algebra given by its structure constants
/// [e_i, e_j] = sum_k c^k_{ij} e_k.
///
/// Only entries with i < j are accepted; the j > i half is the mirror image, so
/// antisymmetry holds by construction. The Jacobi identity is not enforced here
/// (see validate()).
class LieAlgebra {
 public:
  /// Zero algebra of dimension `dim` (abelian).
  explicit LieAlgebra(std::size_t dim = 0, std::vector<std::string> basis_names = {});

  /// Builds from sparse upper-triangular entries. Repeated (i,j,k) triples add up.
  /// Throws InputError on i >= j, out-of-range indices, non-finite values, or a
  /// names list whose length differs from `dim`.
  static LieAlgebra from_entries(std::size_t dim, std::span<const BracketEntry> entries,
                                 std::vector<std::string> basis_names = {});

  std::size_t dim() const { return dim_; }

  /// c^k_{ij}, for any ordering of i and j.
  double constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  const std::vector<std::string>& basis_names() const { return names_; }
  /// Label of basis vector i; falls back to "e<i+1>".
  std::string name(std::size_t i) const;

  /// Nonzero entries with i < j, ordered by (i, j, k).
  std::vector<BracketEntry> entries() const;

  double max_abs_constant() const;

  LieAlgebra with_names(std::vector<std::string> basis_names) const;

 private:
  std::size_t dim_;
  std::vector<double> c_;
  std::vector<std::string> names_;
};

inline Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

/// [u, v]^k = sum_{ij} u^i v^j c^k_{ij}.
Vector bracket(const LieAlgebra& algebra, const Vector& u, const Vector& v);

/// Matrix of ad_v : w -> [v, w].
LinearMap ad_matrix(const LieAlgebra& algebra, const Vector& v);

struct KillingForm {
  Eigen::MatrixXd matrix;  // B_{ij} = trace(ad_{e_i} ad_{e_j})

  double operator()(const Vector& u, const Vector& v) const { return u.dot(matrix * v); }
};

KillingForm killing_form(const LieAlgebra& algebra);

struct SemisimplicityReport {
  bool semisimple = false;
  double min_singular_value = 0.0;
  double max_singular_value = 0.0;
};

/// Cartan's criterion on the singular values of the Killing form:
/// semisimple iff sigma_min > tol * max(1, sigma_max).
SemisimplicityReport is_semisimple(const LieAlgebra& algebra, double tol = kDefaultTol);

/// Block sum: basis of `first` followed by basis of `second`, cross brackets zero.
LieAlgebra direct_sum(const LieAlgebra& first, const LieAlgebra& second);

/// Structure constants in the basis f_a = sum_i change(i, a) e_i.
/// Throws InputError if `change` is not square of the right size or if its
/// reciprocal condition number is below tol.
LieAlgebra change_basis(const LieAlgebra& algebra, const LinearMap& change,
                        double tol = kDefaultTol);

struct ValidationReport {
  bool passed = true;
  /// Antisymmetry is structural, so this is always zero for a constructed algebra.
  std::size_t antisymmetry_violations = 0;
  /// Largest |component| of [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
  double jacobi_residual = 0.0;
  /// Triple (i < j < k) attaining jacobi_residual.
  std::array<std::size_t, 3> witness{0, 0, 0};
  double threshold = 0.0;
};

/// Jacobi check with threshold tol * max(1, max|c|^2).
ValidationReport validate(const LieAlgebra& algebra, double tol = kDefaultTol);

}  // namespace liefol
