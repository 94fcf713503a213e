#include "liefol/curvature.hpp"

#include "liefol/errors.hpp"

#include <algorithm>
#include <cmath>

namespace liefol {

namespace {

void require_riemannian(const std::vector<int>& causalities) {
  for (int e : causalities) {
    if (e != 1) {
      throw UnsupportedSignatureError(
          "curvature formulas are implemented for Riemannian frames only");
    }
  }
}

void require_plane(const RiemannianFrame& frame, std::size_t i, std::size_t j) {
  if (i >= frame.dim() || j >= frame.dim()) throw InputError("plane index out of range");
  if (i == j) throw InputError("sectional curvature needs two distinct frame vectors");
}

}  // namespace

RiemannianFrame RiemannianFrame::declared(LieAlgebra constants) {
  const auto n = static_cast<Eigen::Index>(constants.dim());
  return RiemannianFrame(std::move(constants), LinearMap::Identity(n, n));
}

RiemannianFrame RiemannianFrame::from_metric(const LieAlgebra& algebra, const MetricTensor& metric,
                                             double tol) {
  if (metric.dim() != algebra.dim()) throw InputError("metric dimension does not match algebra");
  const auto n = static_cast<Eigen::Index>(algebra.dim());
  const auto frame = orthonormal_frame(metric, LinearMap::Identity(n, n), tol);
  require_riemannian(frame.causalities);
  return RiemannianFrame(change_basis(algebra, frame.change, tol), frame.change);
}

RiemannianFrame RiemannianFrame::from_causal(LieAlgebra constants,
                                             const std::vector<int>& causalities) {
  if (causalities.size() != constants.dim()) {
    throw InputError("one causality per frame vector is required");
  }
  require_riemannian(causalities);
  return declared(std::move(constants));
}

ConnectionCoefficients levi_civita(const RiemannianFrame& frame) {
  const auto n = frame.dim();
  ConnectionCoefficients c{n, std::vector<double>(n * n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        c.gamma[(i * n + j) * n + k] = 0.5 * (frame(k, i, j) + frame(k, j, i) + frame(i, j, k));
      }
    }
  }
  return c;
}

std::string to_string(CurvatureMethod method) {
  return method == CurvatureMethod::Milnor ? "milnor" : "direct";
}

CurvatureReport sectional_milnor(const RiemannianFrame& l, std::size_t i, std::size_t j) {
  require_plane(l, i, j);
  double first = 0.0;
  double second = 0.0;
  double third = 0.0;
  for (std::size_t k = 0; k < l.dim(); ++k) {
    first += l(k, j, j) * l(k, i, i);
    second += l(i, j, k) * (l(i, j, k) + l(i, k, j) + l(k, j, i));
    third += (l(i, j, k) + l(k, i, j) + l(k, j, i)) * (l(j, i, k) + l(k, i, j) + l(k, j, i));
  }
  return {i, j, -first - 0.5 * second + 0.25 * third, CurvatureMethod::Milnor};
}

CurvatureReport sectional_direct(const RiemannianFrame& frame, std::size_t i, std::size_t j) {
  require_plane(frame, i, j);
  const auto n = frame.dim();
  const auto gamma = levi_civita(frame);
  const auto m = static_cast<Eigen::Index>(n);

  // nabla_u v for constant-coefficient fields u, v.
  auto nabla = [&](const Vector& u, const Vector& v) {
    Vector out = Vector::Zero(m);
    for (std::size_t a = 0; a < n; ++a) {
      if (u(a) == 0.0) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (v(b) == 0.0) continue;
        for (std::size_t c = 0; c < n; ++c) out(c) += u(a) * v(b) * gamma(a, b, c);
      }
    }
    return out;
  };

  const Vector ei = basis_vector(n, i);
  const Vector ej = basis_vector(n, j);
  const Vector r = nabla(ei, nabla(ej, ej)) - nabla(ej, nabla(ei, ej)) -
                   nabla(bracket(frame.constants(), ei, ej), ej);
  return {i, j, r(static_cast<Eigen::Index>(i)), CurvatureMethod::Direct};
}

LeafCurvatureReport oneill_leaf_curvature(const FoliationSetup& s, double tol) {
  require_riemannian(s.causalities);
  const auto frame = RiemannianFrame::declared(s.frame_algebra);
  const auto xi = s.x_index();
  const auto yi = s.y_index();
  const auto coeff = coefficients(s);

  LeafCurvatureReport r;
  const double milnor = sectional_milnor(frame, xi, yi).sectional;
  r.method_gap = std::abs(milnor - sectional_direct(frame, xi, yi).sectional);
  r.horizontal_sectional = milnor;
  r.vertical_term = 0.75 * coeff.theta.squaredNorm();
  r.leaf_curvature = r.horizontal_sectional + r.vertical_term;
  r.rho = coeff.rho;
  r.minus_rho_squared = -coeff.rho * coeff.rho;

  for (std::size_t v = 0; v < s.vertical_dim(); ++v) {
    r.riemannian_relation_residual =
        std::max({r.riemannian_relation_residual, std::abs(frame(v, xi, xi)),
                  std::abs(frame(v, yi, yi)), std::abs(frame(v, xi, yi) + frame(v, yi, xi))});
  }
  const double threshold = tol * s.scale();
  r.riemannian_foliation = classify(s, tol).semi_riemannian;
  r.reliable = r.riemannian_foliation && r.riemannian_relation_residual <= threshold &&
               s.normalized && coeff.xy_leak <= threshold;
  return r;
}

}  // namespace liefol
