#pragma once

#include "liefol/foliation.hpp"
#include "liefol/lie_core.hpp"
#include "liefol/semi_metric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace liefol {

/// Structure constants of a left-invariant Riemannian metric written in a
/// g-orthonormal frame. All curvature formulas here are frame formulas and
/// assume every causality is +1.
class RiemannianFrame {
 public:
  /// The algebra's basis is declared orthonormal.
  static RiemannianFrame declared(LieAlgebra constants);
  /// Orthonormalises the coordinate basis under `metric`. Throws
  /// UnsupportedSignatureError if the metric is not positive definite.
  static RiemannianFrame from_metric(const LieAlgebra& algebra, const MetricTensor& metric,
                                     double tol = kDefaultTol);
  /// Constants in an existing orthonormal frame with the given causalities.
  static RiemannianFrame from_causal(LieAlgebra constants, const std::vector<int>& causalities);

  const LieAlgebra& constants() const { return constants_; }
  /// Frame vectors in the original coordinates (identity for declared()).
  const LinearMap& change() const { return change_; }
  std::size_t dim() const { return constants_.dim(); }

  /// lambda^k_{ij}
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_.constant(i, j, k);
  }

 private:
  RiemannianFrame(LieAlgebra constants, LinearMap change)
      : constants_(std::move(constants)), change_(std::move(change)) {}

  LieAlgebra constants_;
  LinearMap change_;
};

/// gamma(i, j, k): coefficient of e_k in nabla_{e_i} e_j.
struct ConnectionCoefficients {
  std::size_t dim = 0;
  std::vector<double> gamma;

  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma[(i * dim + j) * dim + k];
  }
};

/// Koszul formula: gamma_ij^k = 1/2 (lambda^j_{ki} + lambda^i_{kj} + lambda^k_{ij}).
ConnectionCoefficients levi_civita(const RiemannianFrame& frame);

enum class CurvatureMethod { Milnor, Direct };

std::string to_string(CurvatureMethod method);

struct CurvatureReport {
  std::size_t i = 0;
  std::size_t j = 0;
  double sectional = 0.0;
  CurvatureMethod method = CurvatureMethod::Milnor;
};

/// Closed three-sum formula for K(e_i, e_j) in terms of the structure constants.
CurvatureReport sectional_milnor(const RiemannianFrame& frame, std::size_t i, std::size_t j);

/// K(e_i, e_j) = g(R(e_i,e_j) e_j, e_i) with R built from the connection
/// coefficients; independent of the closed formula.
CurvatureReport sectional_direct(const RiemannianFrame& frame, std::size_t i, std::size_t j);

struct LeafCurvatureReport {
  double horizontal_sectional = 0.0;  // K(X, Y)
  double vertical_term = 0.0;         // 3/4 |V[X, Y]|^2
  double leaf_curvature = 0.0;        // K_L = K(X, Y) + 3/4 |V[X, Y]|^2
  double rho = 0.0;
  double minus_rho_squared = 0.0;
  /// Disagreement between the closed formula and the direct route on the (X, Y) plane.
  double method_gap = 0.0;
  /// max over V of |lambda^X_{VX}|, |lambda^Y_{VY}|, |lambda^Y_{VX} + lambda^X_{VY}|
  double riemannian_relation_residual = 0.0;
  bool riemannian_foliation = false;
  /// The setup satisfies the hypotheses under which K_L = -rho^2 is claimed.
  bool reliable = false;
};

/// O'Neill's formula for the leaf space of a Riemannian foliation.
/// Throws UnsupportedSignatureError unless every frame causality is +1.
LeafCurvatureReport oneill_leaf_curvature(const FoliationSetup& setup, double tol = kDefaultTol);

}  // namespace liefol
