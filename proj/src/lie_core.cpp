#include "liefol/lie_core.hpp"

#include "liefol/errors.hpp"

#include <algorithm>
#include <cmath>

namespace liefol {

namespace {

void require_dim(const LieAlgebra& algebra, const Vector& v, const char* what) {
  if (static_cast<std::size_t>(v.size()) != algebra.dim()) {
    throw InputError(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                     " does not match algebra dimension " + std::to_string(algebra.dim()));
  }
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), c_(dim * dim * dim, 0.0), names_(std::move(basis_names)) {
  if (!names_.empty() && names_.size() != dim_) {
    throw InputError("basis_names has " + std::to_string(names_.size()) +
                     " labels for dimension " + std::to_string(dim_));
  }
}

LieAlgebra LieAlgebra::from_entries(std::size_t dim, std::span<const BracketEntry> entries,
                                    std::vector<std::string> basis_names) {
  LieAlgebra algebra(dim, std::move(basis_names));
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      throw InputError("bracket index out of range for dimension " + std::to_string(dim));
    }
    if (e.i >= e.j) {
      throw InputError("bracket indices must satisfy i < j");
    }
    if (!std::isfinite(e.value)) {
      throw InputError("bracket value must be finite");
    }
    algebra.c_[(e.i * dim + e.j) * dim + e.k] += e.value;
    algebra.c_[(e.j * dim + e.i) * dim + e.k] -= e.value;
  }
  return algebra;
}

std::string LieAlgebra::name(std::size_t i) const {
  if (i < names_.size()) return names_[i];
  return "e" + std::to_string(i + 1);
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const double v = constant(i, j, k);
        if (v != 0.0) out.push_back({i, j, k, v});
      }
    }
  }
  return out;
}

double LieAlgebra::max_abs_constant() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

LieAlgebra LieAlgebra::with_names(std::vector<std::string> basis_names) const {
  LieAlgebra copy = *this;
  if (!basis_names.empty() && basis_names.size() != dim_) {
    throw InputError("basis_names length does not match dimension");
  }
  copy.names_ = std::move(basis_names);
  return copy;
}

Vector bracket(const LieAlgebra& algebra, const Vector& u, const Vector& v) {
  require_dim(algebra, u, "bracket");
  require_dim(algebra, v, "bracket");
  const auto n = algebra.dim();
  Vector out = Vector::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (u(i) == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = u(i) * v(j);
      if (w == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) out(k) += w * algebra.constant(i, j, k);
    }
  }
  return out;
}

LinearMap ad_matrix(const LieAlgebra& algebra, const Vector& v) {
  require_dim(algebra, v, "ad_matrix");
  const auto n = static_cast<Eigen::Index>(algebra.dim());
  LinearMap ad = LinearMap::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    ad.col(j) = bracket(algebra, v, basis_vector(algebra.dim(), j));
  }
  return ad;
}

KillingForm killing_form(const LieAlgebra& algebra) {
  const auto n = algebra.dim();
  std::vector<LinearMap> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(algebra, basis_vector(n, i)));

  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd b(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      // trace(A B) without forming the product
      b(i, j) = b(j, i) = ads[i].cwiseProduct(ads[j].transpose()).sum();
    }
  }
  return {std::move(b)};
}

SemisimplicityReport is_semisimple(const LieAlgebra& algebra, double tol) {
  SemisimplicityReport report;
  if (algebra.dim() == 0) return report;
  const auto b = killing_form(algebra);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b.matrix);
  const auto& s = svd.singularValues();
  report.max_singular_value = s.maxCoeff();
  report.min_singular_value = s.minCoeff();
  report.semisimple =
      report.min_singular_value > tol * std::max(1.0, report.max_singular_value);
  return report;
}

LieAlgebra direct_sum(const LieAlgebra& first, const LieAlgebra& second) {
  const auto n1 = first.dim();
  std::vector<BracketEntry> entries = first.entries();
  for (auto e : second.entries()) {
    e.i += n1;
    e.j += n1;
    e.k += n1;
    entries.push_back(e);
  }
  std::vector<std::string> names;
  if (!first.basis_names().empty() || !second.basis_names().empty()) {
    for (std::size_t i = 0; i < first.dim(); ++i) names.push_back(first.name(i));
    for (std::size_t i = 0; i < second.dim(); ++i) names.push_back(second.name(i));
  }
  return LieAlgebra::from_entries(n1 + second.dim(), entries, std::move(names));
}

LieAlgebra change_basis(const LieAlgebra& algebra, const LinearMap& change, double tol) {
  const auto n = algebra.dim();
  if (static_cast<std::size_t>(change.rows()) != n ||
      static_cast<std::size_t>(change.cols()) != n) {
    throw InputError("change_basis: matrix must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  if (n == 0) return algebra;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(change);
  const auto& s = svd.singularValues();
  if (!(s.minCoeff() > tol * s.maxCoeff())) {
    throw InputError("change_basis: matrix is singular or ill-conditioned");
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(change);

  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector image = lu.solve(bracket(algebra, change.col(a), change.col(b)));
      for (std::size_t c = 0; c < n; ++c) {
        if (image(c) != 0.0) entries.push_back({a, b, c, image(c)});
      }
    }
  }
  return LieAlgebra::from_entries(n, entries);
}

ValidationReport validate(const LieAlgebra& algebra, double tol) {
  ValidationReport report;
  const auto n = algebra.dim();
  const double cmax = algebra.max_abs_constant();
  report.threshold = tol * std::max(1.0, cmax * cmax);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          double sum = 0.0;
          for (std::size_t m = 0; m < n; ++m) {
            sum += algebra.constant(j, k, m) * algebra.constant(i, m, l) +
                   algebra.constant(k, i, m) * algebra.constant(j, m, l) +
                   algebra.constant(i, j, m) * algebra.constant(k, m, l);
          }
          if (std::abs(sum) > report.jacobi_residual) {
            report.jacobi_residual = std::abs(sum);
            report.witness = {i, j, k};
          }
        }
      }
    }
  }
  report.passed = report.jacobi_residual <= report.threshold;
  return report;
}

}  // namespace liefol
