#include "liefol/semi_metric.hpp"

#include "liefol/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace liefol {

MetricTensor::MetricTensor(const Eigen::MatrixXd& matrix, double tol) {
  if (matrix.rows() != matrix.cols()) {
    throw InputError("metric must be a square matrix");
  }
  if (!matrix.allFinite()) {
    throw InputError("metric entries must be finite");
  }
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw InputError("metric must be symmetric");
  }
  g_ = matrix.triangularView<Eigen::Upper>();
  g_.triangularView<Eigen::StrictlyLower>() = g_.transpose().triangularView<Eigen::StrictlyLower>();
}

MetricTensor MetricTensor::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return MetricTensor(Eigen::MatrixXd::Identity(n, n));
}

Signature signature(const MetricTensor& metric, double tol) {
  Signature sig;
  if (metric.dim() == 0) return sig;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(metric.matrix(), Eigen::EigenvaluesOnly);
  const auto& values = eig.eigenvalues();
  const double threshold = tol * std::max(1.0, values.cwiseAbs().maxCoeff());
  for (double v : values) {
    if (std::abs(v) <= threshold) {
      throw DegenerateMetricError("metric is degenerate (eigenvalue " + std::to_string(v) + ")");
    }
    (v > 0 ? sig.positive : sig.negative) += 1;
  }
  return sig;
}

OrthonormalFrame orthonormal_frame(const MetricTensor& metric, const LinearMap& seed, double tol) {
  const auto n = static_cast<Eigen::Index>(metric.dim());
  if (seed.rows() != n) {
    throw InputError("orthonormal_frame: seed vectors do not match metric dimension");
  }
  const auto m = seed.cols();

  std::vector<Vector> candidates;
  double seed_scale = 1.0;
  for (Eigen::Index a = 0; a < m; ++a) {
    candidates.emplace_back(seed.col(a));
    seed_scale = std::max(seed_scale, seed.col(a).squaredNorm());
  }
  const double metric_scale = n > 0 ? std::max(1.0, metric.matrix().cwiseAbs().maxCoeff()) : 1.0;
  const double threshold = tol * metric_scale * seed_scale;

  OrthonormalFrame frame;
  frame.change = LinearMap::Zero(n, m);

  auto project = [&](Vector& v) {
    for (std::size_t f = 0; f < frame.causalities.size(); ++f) {
      const Vector basis = frame.column(f);
      v -= frame.causalities[f] * metric(v, basis) * basis;
    }
  };

  for (Eigen::Index step = 0; step < m; ++step) {
    for (auto& v : candidates) {
      project(v);
      project(v);  // second pass for orthogonality drift
    }

    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const double q = std::abs(metric(candidates[c], candidates[c]));
      if (q > best_norm) {
        best_norm = q;
        best = c;
      }
    }

    if (best_norm <= threshold) {
      // All remaining candidates are null; look for a non-null combination.
      double best_pair = threshold;
      std::optional<std::pair<std::size_t, std::size_t>> pair;
      for (std::size_t a = 0; a < candidates.size(); ++a) {
        for (std::size_t b = a + 1; b < candidates.size(); ++b) {
          const double p = std::abs(metric(candidates[a], candidates[b]));
          if (p > best_pair) {
            best_pair = p;
            pair = {a, b};
          }
        }
      }
      if (!pair) {
        throw DegenerateMetricError(
            "orthonormal_frame: metric is degenerate on the span of the seed vectors");
      }
      const auto [a, b] = *pair;
      const double sign = metric(candidates[a], candidates[b]) > 0 ? 1.0 : -1.0;
      candidates[a] += sign * candidates[b];
      best = a;
    }

    Vector v = std::move(candidates[best]);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
    const double q = metric(v, v);
    frame.change.col(step) = v / std::sqrt(std::abs(q));
    frame.causalities.push_back(q > 0 ? 1 : -1);
  }
  return frame;
}

MetricTensor restrict(const MetricTensor& metric, const LinearMap& subspace) {
  if (subspace.rows() != static_cast<Eigen::Index>(metric.dim())) {
    throw InputError("restrict: subspace vectors do not match metric dimension");
  }
  const Eigen::MatrixXd gram = subspace.transpose() * metric.matrix() * subspace;
  return MetricTensor(0.5 * (gram + gram.transpose()));
}

InvolutionCheck check_cartan_involution(const LieAlgebra& algebra, const CartanInvolution& theta,
                                        double tol) {
  const auto n = algebra.dim();
  const auto& t = theta.matrix;
  if (static_cast<std::size_t>(t.rows()) != n || static_cast<std::size_t>(t.cols()) != n) {
    throw InputError("Cartan involution must be a square matrix of the algebra dimension");
  }
  InvolutionCheck check;
  const auto id = Eigen::MatrixXd::Identity(t.rows(), t.cols());
  check.involution_residual = n ? (t * t - id).cwiseAbs().maxCoeff() : 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = t * bracket(algebra, basis_vector(n, i), basis_vector(n, j));
      const Vector rhs = bracket(algebra, t.col(i), t.col(j));
      check.automorphism_residual =
          std::max(check.automorphism_residual, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }

  const Eigen::MatrixXd form = -killing_form(algebra).matrix * t;
  const Eigen::MatrixXd sym = 0.5 * (form + form.transpose());
  if (n) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
    check.min_eigenvalue = eig.eigenvalues().minCoeff();
  }

  const double cmax = std::max(1.0, algebra.max_abs_constant());
  const double form_scale = n ? std::max(1.0, form.cwiseAbs().maxCoeff()) : 1.0;
  check.valid = check.involution_residual <= tol &&
                check.automorphism_residual <= tol * cmax &&
                (form - form.transpose()).cwiseAbs().maxCoeff() <= tol * form_scale &&
                check.min_eigenvalue > tol * form_scale;
  return check;
}

MetricTensor cartan_killing_metric(const LieAlgebra& algebra, const CartanInvolution& theta,
                                   double tol) {
  const auto check = check_cartan_involution(algebra, theta, tol);
  if (!check.valid) {
    throw InvalidInvolutionError(
        "not a Cartan involution: involution residual " + std::to_string(check.involution_residual) +
        ", automorphism residual " + std::to_string(check.automorphism_residual) +
        ", min eigenvalue of -B(., theta .) " + std::to_string(check.min_eigenvalue));
  }
  const Eigen::MatrixXd form = -killing_form(algebra).matrix * theta.matrix;
  return MetricTensor(0.5 * (form + form.transpose()));
}

MetricTensor g_epsilon(const MetricTensor& metric, const OrthonormalFrame& frame,
                       const std::vector<int>& eps, double tol) {
  const auto n = static_cast<Eigen::Index>(metric.dim());
  if (frame.change.rows() != n || frame.change.cols() != n) {
    throw InputError("g_epsilon: frame must be a full basis");
  }
  if (eps.size() != metric.dim()) {
    throw InputError("g_epsilon: eps must have one sign per frame vector");
  }
  Eigen::VectorXd diag(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    if (eps[a] != 1 && eps[a] != -1) throw InputError("g_epsilon: eps entries must be +1 or -1");
    diag(a) = eps[a];
  }
  const Eigen::MatrixXd gram = frame.change.transpose() * metric.matrix() * frame.change;
  const double scale = std::max(1.0, metric.matrix().cwiseAbs().maxCoeff());
  if ((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > tol * scale) {
    throw InputError("g_epsilon: frame is not orthonormal for a positive-definite metric");
  }
  // Matrix of the new form in the old coordinates: P^{-T} diag(eps) P^{-1}.
  const Eigen::MatrixXd inv = frame.change.inverse();
  const Eigen::MatrixXd form = inv.transpose() * diag.asDiagonal() * inv;
  return MetricTensor(0.5 * (form + form.transpose()));
}

}  // namespace liefol
