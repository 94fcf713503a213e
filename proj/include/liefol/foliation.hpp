#pragma once

#include "liefol/lie_core.hpp"
#include "liefol/semi_metric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liefol {

/// A codimension-two vertical subspace together with an adapted orthonormal
/// frame {V_1..V_n, X, Y}.
///
/// Frame indices 0..n-1 are the vertical vectors, n is X and n+1 is Y.
/// `frame_algebra` holds the structure constants in that frame, so
/// g([e_a, e_b], e_c) = causalities[c] * frame_algebra.constant(a, b, c).
struct FoliationSetup {
  LieAlgebra algebra;
  MetricTensor metric;
  std::vector<std::size_t> vertical_indices;

  LinearMap frame;  // columns V_1..V_n, X, Y in the algebra's coordinates
  std::vector<int> causalities;
  LieAlgebra frame_algebra;

  bool vertical_closed = true;  // [V, V] has no horizontal part
  double closure_leak = 0.0;
  bool normalized = true;       // horizontal part of [X, Y] is rho X
  double normalization_leak = 0.0;
  double tol = kDefaultTol;

  std::size_t vertical_dim() const { return vertical_indices.size(); }
  std::size_t x_index() const { return vertical_dim(); }
  std::size_t y_index() const { return vertical_dim() + 1; }
  Vector vertical(std::size_t i) const { return frame.col(static_cast<Eigen::Index>(i)); }
  Vector x() const { return frame.col(static_cast<Eigen::Index>(x_index())); }
  Vector y() const { return frame.col(static_cast<Eigen::Index>(y_index())); }
  int eps(std::size_t a) const { return causalities[a]; }
  /// max(1, max |frame constant|); thresholds are tol * scale().
  double scale() const;
};

/// Orthonormalises the vertical span (indefinite Gram-Schmidt), completes it
/// with an orthonormal pair spanning the g-orthogonal complement, then turns
/// (X, Y) so that the horizontal part of [X, Y] is rho X with rho >= 0.
///
/// Throws InputError unless exactly two indices are left out, and
/// DegenerateMetricError when g is degenerate on either distribution. A
/// vertical span that is not a subalgebra is recorded in the setup, not thrown.
FoliationSetup adapted_frame(const LieAlgebra& algebra, const MetricTensor& metric,
                             const std::vector<std::size_t>& vertical_indices,
                             double tol = kDefaultTol);

/// Structure constants of the vertical distribution in the vertical frame
/// (horizontal leakage of [V, V] is dropped).
LieAlgebra vertical_subalgebra(const FoliationSetup& setup);

struct FoliationCoefficients {
  Eigen::MatrixXd x;  // x(i, k): [X, V_i] = sum_k x(i, k) V_k + ...
  Eigen::MatrixXd y;  // y(i, k): [Y, V_i] = sum_k y(i, k) V_k + ...
  double rho = 0.0;   // [X, Y] = rho X + sum_k theta(k) V_k
  Eigen::VectorXd theta;

  /// Largest horizontal component of [X, V_i] and [Y, V_i]; zero whenever H[V, H] = 0.
  double horizontal_leak_x = 0.0;
  double horizontal_leak_y = 0.0;
  /// Y-component of [X, Y].
  double xy_leak = 0.0;
  /// Largest norm of the brackets minus their reconstruction, in the algebra's coordinates.
  double reconstruction_residual = 0.0;
};

FoliationCoefficients coefficients(const FoliationSetup& setup);

/// Second fundamental forms from the Koszul formula on the full frame.
/// bv_x(i, j), bv_y(i, j): X- and Y-components of B^V(V_i, V_j).
/// bh_xx, bh_xy, bh_yy: vertical components of B^H(X,X), B^H(X,Y), B^H(Y,Y).
struct SecondFundamentalForms {
  Eigen::MatrixXd bv_x;
  Eigen::MatrixXd bv_y;
  Eigen::VectorXd bh_xx;
  Eigen::VectorXd bh_xy;
  Eigen::VectorXd bh_yy;
};

SecondFundamentalForms second_fundamental_forms(const FoliationSetup& setup);

struct FoliationClassification {
  bool conformal = false;
  bool semi_riemannian = false;
  bool minimal = false;
  bool totally_geodesic = false;

  /// max |eps_X B^H(X,X) - eps_Y B^H(Y,Y)| and |B^H(X,Y)|
  double conformal_witness = 0.0;
  /// max |eps_X B^H(X,X) + eps_Y B^H(Y,Y)|
  double semi_riemannian_witness = 0.0;
  /// max of |sum_i x(i,i)| and |sum_i y(i,i)|
  double minimal_witness = 0.0;
  /// max over i, j of |eps_j x(i,j) + eps_i x(j,i)| and the same for y
  double totally_geodesic_witness = 0.0;
  /// Largest disagreement between the coefficient criteria and B^V from the connection.
  double route_disagreement = 0.0;
  double threshold = 0.0;
};

FoliationClassification classify(const FoliationSetup& setup, double tol = kDefaultTol);

struct StructuralReport {
  /// max horizontal component of [[V_a, V_b], X] and [[V_a, V_b], Y]
  double bracket_closure_residual = 0.0;
  bool bracket_closure_pass = true;
  /// max component of [V_k, H] on the factor V_j, j != k; only with factors
  std::optional<double> cross_factor_residual;
  std::optional<bool> cross_factor_pass;
  double threshold = 0.0;
};

/// `factors` partitions the vertical indices (algebra coordinates) into ideals.
/// Throws InputError if it is not a partition or a factor is not an ideal.
StructuralReport structural_checks(const FoliationSetup& setup, double tol = kDefaultTol,
                                   const std::optional<std::vector<std::vector<std::size_t>>>&
                                       factors = std::nullopt);

enum class TheoremOutcome { PremisesFail, Verified, Contradiction };

std::string to_string(TheoremOutcome outcome);

struct PremiseCheck {
  std::string name;
  bool holds = false;
  double witness = 0.0;
};

struct TheoremReport {
  std::string claim;
  std::vector<PremiseCheck> premises;
  std::string conclusion;
  bool conclusion_holds = false;
  double conclusion_witness = 0.0;
  TheoremOutcome outcome = TheoremOutcome::PremisesFail;

  bool premises_hold() const;
};

/// Semisimple vertical subalgebra + conformal foliation => minimal.
TheoremReport verify_theorem_minimal(const LieAlgebra& algebra, const MetricTensor& metric,
                                     const std::vector<std::size_t>& vertical_indices,
                                     double tol = kDefaultTol);

struct TotallyGeodesicReport {
  /// Vertical metric a positive multiple of the negative Killing form + conformal => totally geodesic.
  TheoremReport killing;
  /// Least-squares c in g|V = c * (-B_V).
  double killing_scale = 0.0;
  double killing_fit_residual = 0.0;
  /// Vertical metric of g_epsilon type (diagonal frame, Cartan involution diagonal) + conformal => minimal.
  TheoremReport g_epsilon;
};

TotallyGeodesicReport verify_theorem_totally_geodesic(
    const LieAlgebra& algebra, const MetricTensor& metric,
    const std::vector<std::size_t>& vertical_indices, double tol = kDefaultTol);

/// trace(ad_X) - sum_i eps_i g([X,V_i],V_i) - eps_X g([X,X],X) - eps_Y g([X,Y],Y),
/// and the same with Y. Both vanish identically.
struct TraceIdentityResidual {
  double x = 0.0;
  double y = 0.0;
};

TraceIdentityResidual trace_identity_residual(const FoliationSetup& setup);

}  // namespace liefol
