#include "liefol/foliation.hpp"

#include "liefol/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace liefol {

namespace {

/// g(nabla_{e_a} e_b, e_c) for left-invariant fields in an orthonormal frame.
double koszul(const FoliationSetup& s, std::size_t a, std::size_t b, std::size_t c) {
  const auto& l = s.frame_algebra;
  return 0.5 * (s.eps(c) * l.constant(a, b, c) - s.eps(a) * l.constant(b, c, a) +
                s.eps(b) * l.constant(c, a, b));
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

double FoliationSetup::scale() const { return std::max(1.0, frame_algebra.max_abs_constant()); }

FoliationSetup adapted_frame(const LieAlgebra& algebra, const MetricTensor& metric,
                             const std::vector<std::size_t>& vertical_indices, double tol) {
  const auto dim = algebra.dim();
  if (metric.dim() != dim) {
    throw InputError("metric dimension " + std::to_string(metric.dim()) +
                     " does not match algebra dimension " + std::to_string(dim));
  }
  const std::set<std::size_t> unique(vertical_indices.begin(), vertical_indices.end());
  if (unique.size() != vertical_indices.size()) {
    throw InputError("vertical indices must be distinct");
  }
  for (auto i : vertical_indices) {
    if (i >= dim) throw InputError("vertical index " + std::to_string(i) + " out of range");
  }
  if (dim < 2 || vertical_indices.size() != dim - 2) {
    throw InputError("foliation must have codimension two: algebra dimension " +
                     std::to_string(dim) + ", vertical dimension " +
                     std::to_string(vertical_indices.size()));
  }

  FoliationSetup s;
  s.algebra = algebra;
  s.metric = metric;
  s.vertical_indices = vertical_indices;
  s.tol = tol;
  const auto n = vertical_indices.size();
  const auto d = static_cast<Eigen::Index>(dim);

  LinearMap vseed(d, static_cast<Eigen::Index>(n));
  for (std::size_t a = 0; a < n; ++a) vseed.col(a) = basis_vector(dim, vertical_indices[a]);
  const auto vframe = orthonormal_frame(metric, vseed, tol);

  // The g-orthogonal complement is spanned by the projections of the two
  // remaining coordinate vectors.
  LinearMap hseed(d, 2);
  Eigen::Index col = 0;
  for (std::size_t j = 0; j < dim; ++j) {
    if (unique.count(j)) continue;
    Vector w = basis_vector(dim, j);
    for (std::size_t a = 0; a < n; ++a) {
      const Vector v = vframe.column(a);
      w -= vframe.causalities[a] * metric(w, v) * v;
    }
    hseed.col(col++) = w;
  }
  const auto hframe = orthonormal_frame(metric, hseed, tol);

  Vector x0 = hframe.column(0);
  Vector y0 = hframe.column(1);
  const int ex0 = hframe.causalities[0];
  const int ey0 = hframe.causalities[1];

  // Horizontal part of [X0, Y0] = a X0 + b Y0.
  const Vector xy = bracket(algebra, x0, y0);
  const double a = ex0 * metric(xy, x0);
  const double b = ey0 * metric(xy, y0);
  const double threshold = tol * std::max(1.0, algebra.max_abs_constant());

  Vector xh = x0;
  Vector yh = y0;
  if (std::max(std::abs(a), std::abs(b)) > threshold) {
    const double q = ex0 * a * a + ey0 * b * b;  // g(h, h)
    if (std::abs(q) > threshold * threshold) {
      const double norm = std::sqrt(std::abs(q));
      const double alpha = a / norm;
      const double beta = b / norm;
      // (z1, z2) is g-orthogonal to (alpha, beta) in the (X0, Y0) plane.
      double z1 = ey0 * beta;
      double z2 = -ex0 * alpha;
      const double zn = std::sqrt(std::abs(ex0 * z1 * z1 + ey0 * z2 * z2));
      z1 /= zn;
      z2 /= zn;
      if (alpha * z2 - beta * z1 < 0) {
        z1 = -z1;
        z2 = -z2;
      }
      xh = alpha * x0 + beta * y0;
      yh = z1 * x0 + z2 * y0;
    } else {
      s.normalized = false;  // null horizontal bracket in a Lorentzian plane
    }
  }

  s.frame = LinearMap(d, d);
  for (std::size_t i = 0; i < n; ++i) s.frame.col(i) = vframe.column(i);
  s.frame.col(n) = xh;
  s.frame.col(n + 1) = yh;
  s.causalities = vframe.causalities;
  s.causalities.push_back(metric(xh, xh) > 0 ? 1 : -1);
  s.causalities.push_back(metric(yh, yh) > 0 ? 1 : -1);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("V" + std::to_string(i + 1));
  names.emplace_back("X");
  names.emplace_back("Y");
  s.frame_algebra = change_basis(algebra, s.frame, tol).with_names(std::move(names));

  const double frame_threshold = tol * s.scale();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      s.closure_leak = std::max({s.closure_leak, std::abs(s.frame_algebra.constant(p, q, n)),
                                 std::abs(s.frame_algebra.constant(p, q, n + 1))});
    }
  }
  s.vertical_closed = s.closure_leak <= frame_threshold;
  s.normalization_leak = std::abs(s.frame_algebra.constant(n, n + 1, n + 1));
  if (s.normalization_leak > frame_threshold) s.normalized = false;
  return s;
}

LieAlgebra vertical_subalgebra(const FoliationSetup& s) {
  const auto n = s.vertical_dim();
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        const double v = s.frame_algebra.constant(a, b, k);
        if (v != 0.0) entries.push_back({a, b, k, v});
      }
    }
  }
  return LieAlgebra::from_entries(n, entries);
}

FoliationCoefficients coefficients(const FoliationSetup& s) {
  const auto n = s.vertical_dim();
  const auto xi = s.x_index();
  const auto yi = s.y_index();
  const auto& l = s.frame_algebra;
  const auto m = static_cast<Eigen::Index>(n);

  FoliationCoefficients c;
  c.x = Eigen::MatrixXd::Zero(m, m);
  c.y = Eigen::MatrixXd::Zero(m, m);
  c.theta = Eigen::VectorXd::Zero(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      c.x(i, k) = l.constant(xi, i, k);
      c.y(i, k) = l.constant(yi, i, k);
    }
    c.theta(i) = l.constant(xi, yi, i);
    c.horizontal_leak_x = std::max(
        {c.horizontal_leak_x, std::abs(l.constant(xi, i, xi)), std::abs(l.constant(xi, i, yi))});
    c.horizontal_leak_y = std::max(
        {c.horizontal_leak_y, std::abs(l.constant(yi, i, xi)), std::abs(l.constant(yi, i, yi))});
  }
  c.rho = l.constant(xi, yi, xi);
  c.xy_leak = std::abs(l.constant(xi, yi, yi));

  // Rebuild the brackets in the algebra's own coordinates.
  const Vector x = s.x();
  const Vector y = s.y();
  for (std::size_t i = 0; i < n; ++i) {
    Vector rx = bracket(s.algebra, x, s.vertical(i));
    Vector ry = bracket(s.algebra, y, s.vertical(i));
    for (std::size_t k = 0; k < n; ++k) {
      rx -= c.x(i, k) * s.vertical(k);
      ry -= c.y(i, k) * s.vertical(k);
    }
    c.reconstruction_residual = std::max({c.reconstruction_residual, rx.norm(), ry.norm()});
  }
  Vector rxy = bracket(s.algebra, x, y) - c.rho * x;
  for (std::size_t k = 0; k < n; ++k) rxy -= c.theta(k) * s.vertical(k);
  c.reconstruction_residual = std::max(c.reconstruction_residual, rxy.norm());
  return c;
}

SecondFundamentalForms second_fundamental_forms(const FoliationSetup& s) {
  const auto n = s.vertical_dim();
  const auto xi = s.x_index();
  const auto yi = s.y_index();
  const auto m = static_cast<Eigen::Index>(n);

  SecondFundamentalForms f;
  f.bv_x = Eigen::MatrixXd::Zero(m, m);
  f.bv_y = Eigen::MatrixXd::Zero(m, m);
  f.bh_xx = Eigen::VectorXd::Zero(m);
  f.bh_xy = Eigen::VectorXd::Zero(m);
  f.bh_yy = Eigen::VectorXd::Zero(m);

  // B^V(V_i, V_j) = 1/2 H(nabla_i V_j + nabla_j V_i)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double bx = 0.5 * s.eps(xi) * (koszul(s, i, j, xi) + koszul(s, j, i, xi));
      const double by = 0.5 * s.eps(yi) * (koszul(s, i, j, yi) + koszul(s, j, i, yi));
      f.bv_x(i, j) = f.bv_x(j, i) = bx;
      f.bv_y(i, j) = f.bv_y(j, i) = by;
    }
  }
  // B^H(E, F) = 1/2 V(nabla_E F + nabla_F E)
  for (std::size_t k = 0; k < n; ++k) {
    const double ek = s.eps(k);
    f.bh_xx(k) = ek * koszul(s, xi, xi, k);
    f.bh_yy(k) = ek * koszul(s, yi, yi, k);
    f.bh_xy(k) = 0.5 * ek * (koszul(s, xi, yi, k) + koszul(s, yi, xi, k));
  }
  return f;
}

FoliationClassification classify(const FoliationSetup& s, double tol) {
  const auto n = s.vertical_dim();
  const int ex = s.eps(s.x_index());
  const int ey = s.eps(s.y_index());
  const auto forms = second_fundamental_forms(s);
  const auto coeff = coefficients(s);

  FoliationClassification c;
  c.threshold = tol * s.scale();

  const Eigen::VectorXd diff = ex * forms.bh_xx - ey * forms.bh_yy;
  const Eigen::VectorXd sum = ex * forms.bh_xx + ey * forms.bh_yy;
  c.conformal_witness = std::max(max_abs(diff), max_abs(forms.bh_xy));
  c.semi_riemannian_witness = max_abs(sum);
  c.conformal = c.conformal_witness <= c.threshold;
  c.semi_riemannian = c.conformal && c.semi_riemannian_witness <= c.threshold;

  // Mean curvature: the metric trace of B^V, i.e. trace of V o ad_X on V.
  const double trace_x = coeff.x.trace();
  const double trace_y = coeff.y.trace();
  c.minimal_witness = std::max(std::abs(trace_x), std::abs(trace_y));

  double bv_trace_x = 0.0;
  double bv_trace_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    bv_trace_x += s.eps(i) * forms.bv_x(i, i);
    bv_trace_y += s.eps(i) * forms.bv_y(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      const double tx = s.eps(j) * coeff.x(i, j) + s.eps(i) * coeff.x(j, i);
      const double ty = s.eps(j) * coeff.y(i, j) + s.eps(i) * coeff.y(j, i);
      c.totally_geodesic_witness =
          std::max({c.totally_geodesic_witness, std::abs(tx), std::abs(ty)});
      c.route_disagreement = std::max({c.route_disagreement,
                                       std::abs(forms.bv_x(i, j) - 0.5 * ex * tx),
                                       std::abs(forms.bv_y(i, j) - 0.5 * ey * ty)});
    }
  }
  c.route_disagreement = std::max({c.route_disagreement, std::abs(bv_trace_x - ex * trace_x),
                                   std::abs(bv_trace_y - ey * trace_y)});

  c.minimal = c.minimal_witness <= c.threshold;
  c.totally_geodesic = c.totally_geodesic_witness <= c.threshold;
  // Each |x(i,i)| is at most half the geodesic witness, but the trace sums n of
  // them, so the implication is imposed rather than left to rounding.
  c.minimal = c.minimal || c.totally_geodesic;
  return c;
}

StructuralReport structural_checks(
    const FoliationSetup& s, double tol,
    const std::optional<std::vector<std::vector<std::size_t>>>& factors) {
  const auto n = s.vertical_dim();
  const auto& l = s.frame_algebra;
  const auto dim = n + 2;

  StructuralReport r;
  r.threshold = tol * s.scale() * s.scale();

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector vv = bracket(l, basis_vector(dim, a), basis_vector(dim, b));
      for (auto h : {s.x_index(), s.y_index()}) {
        const Vector w = bracket(l, vv, basis_vector(dim, h));
        r.bracket_closure_residual =
            std::max({r.bracket_closure_residual, std::abs(w(static_cast<Eigen::Index>(n))),
                      std::abs(w(static_cast<Eigen::Index>(n + 1)))});
      }
    }
  }
  r.bracket_closure_pass = r.bracket_closure_residual <= r.threshold;

  if (!factors) return r;

  // Factors are given in the algebra's coordinates.
  const auto ambient = s.algebra.dim();
  std::vector<int> owner(ambient, -1);
  for (std::size_t f = 0; f < factors->size(); ++f) {
    for (auto i : (*factors)[f]) {
      if (i >= ambient || std::find(s.vertical_indices.begin(), s.vertical_indices.end(), i) ==
                              s.vertical_indices.end()) {
        throw InputError("factor index " + std::to_string(i) + " is not a vertical index");
      }
      if (owner[i] != -1) throw InputError("factors overlap at index " + std::to_string(i));
      owner[i] = static_cast<int>(f);
    }
  }
  for (auto i : s.vertical_indices) {
    if (owner[i] == -1) throw InputError("factors do not cover vertical index " + std::to_string(i));
  }

  const double ideal_threshold = tol * std::max(1.0, s.algebra.max_abs_constant());
  for (auto i : s.vertical_indices) {
    for (auto k : s.vertical_indices) {
      const Vector w = bracket(s.algebra, basis_vector(ambient, i), basis_vector(ambient, k));
      for (std::size_t c = 0; c < ambient; ++c) {
        if (owner[c] != owner[i] && std::abs(w(static_cast<Eigen::Index>(c))) > ideal_threshold) {
          throw InputError("factor containing index " + std::to_string(i) +
                           " is not closed under bracket with the vertical algebra");
        }
      }
    }
  }

  std::vector<OrthonormalFrame> frames;
  for (const auto& block : *factors) {
    LinearMap seed(static_cast<Eigen::Index>(ambient), static_cast<Eigen::Index>(block.size()));
    for (std::size_t a = 0; a < block.size(); ++a) seed.col(a) = basis_vector(ambient, block[a]);
    frames.push_back(orthonormal_frame(s.metric, seed, tol));
  }

  double cross = 0.0;
  for (std::size_t k = 0; k < factors->size(); ++k) {
    for (auto i : (*factors)[k]) {
      for (const Vector& h : {s.x(), s.y()}) {
        const Vector w = bracket(s.algebra, basis_vector(ambient, i), h);
        for (std::size_t j = 0; j < frames.size(); ++j) {
          if (j == k) continue;
          for (std::size_t f = 0; f < frames[j].size(); ++f) {
            cross = std::max(cross, std::abs(s.metric(w, frames[j].column(f))));
          }
        }
      }
    }
  }
  r.cross_factor_residual = cross;
  r.cross_factor_pass = cross <= r.threshold;
  return r;
}

std::string to_string(TheoremOutcome outcome) {
  switch (outcome) {
    case TheoremOutcome::PremisesFail:
      return "premises-fail";
    case TheoremOutcome::Verified:
      return "premises-hold-and-conclusion-holds";
    case TheoremOutcome::Contradiction:
      return "premises-hold-and-conclusion-fails";
  }
  return "unknown";
}

bool TheoremReport::premises_hold() const {
  return std::all_of(premises.begin(), premises.end(), [](const auto& p) { return p.holds; });
}

namespace {

void settle(TheoremReport& r) {
  if (!r.premises_hold()) {
    r.outcome = TheoremOutcome::PremisesFail;
  } else {
    r.outcome = r.conclusion_holds ? TheoremOutcome::Verified : TheoremOutcome::Contradiction;
  }
}

PremiseCheck semisimple_premise(const FoliationSetup& s, double tol) {
  const auto ss = is_semisimple(vertical_subalgebra(s), tol);
  return {"vertical subalgebra semisimple", ss.semisimple, ss.min_singular_value};
}

}  // namespace

TheoremReport verify_theorem_minimal(const LieAlgebra& algebra, const MetricTensor& metric,
                                     const std::vector<std::size_t>& vertical_indices,
                                     double tol) {
  const auto s = adapted_frame(algebra, metric, vertical_indices, tol);
  const auto c = classify(s, tol);

  TheoremReport r;
  r.claim = "semisimple subgroup generating a conformal codimension-two foliation => minimal";
  r.premises.push_back({"vertical span closed under bracket", s.vertical_closed, s.closure_leak});
  r.premises.push_back(semisimple_premise(s, tol));
  r.premises.push_back({"foliation conformal", c.conformal, c.conformal_witness});
  r.conclusion = "minimal";
  r.conclusion_holds = c.minimal;
  r.conclusion_witness = c.minimal_witness;
  settle(r);
  return r;
}

TotallyGeodesicReport verify_theorem_totally_geodesic(
    const LieAlgebra& algebra, const MetricTensor& metric,
    const std::vector<std::size_t>& vertical_indices, double tol) {
  const auto s = adapted_frame(algebra, metric, vertical_indices, tol);
  const auto c = classify(s, tol);
  const auto n = static_cast<Eigen::Index>(s.vertical_dim());
  const auto vertical = vertical_subalgebra(s);
  const Eigen::MatrixXd killing = killing_form(vertical).matrix;
  const PremiseCheck closed{"vertical span closed under bracket", s.vertical_closed,
                            s.closure_leak};
  const PremiseCheck semisimple = semisimple_premise(s, tol);
  const PremiseCheck conformal{"foliation conformal", c.conformal, c.conformal_witness};

  Eigen::VectorXd eps(n);
  for (Eigen::Index i = 0; i < n; ++i) eps(i) = s.eps(static_cast<std::size_t>(i));
  const Eigen::MatrixXd gram = eps.asDiagonal();

  TotallyGeodesicReport out;

  // g|V = c (-B) with c > 0
  const Eigen::MatrixXd neg_b = -killing;
  const double denom = neg_b.squaredNorm();
  out.killing_scale = denom > 0 ? gram.cwiseProduct(neg_b).sum() / denom : 0.0;
  out.killing_fit_residual = (gram - out.killing_scale * neg_b).norm();
  const bool fit = denom > 0 && out.killing_scale > 0 &&
                   out.killing_fit_residual <= tol * std::max(1.0, gram.norm()) * s.scale();

  auto& k = out.killing;
  k.claim = "vertical metric induced by the negative Killing form + conformal => totally geodesic";
  k.premises = {closed, semisimple,
                {"vertical metric proportional to negative Killing form", fit,
                 out.killing_fit_residual},
                conformal};
  k.conclusion = "totally geodesic";
  k.conclusion_holds = c.totally_geodesic;
  k.conclusion_witness = c.totally_geodesic_witness;
  settle(k);

  // g|V of g_epsilon type: in the vertical frame B is diagonal with entries of
  // one magnitude, and theta = diag(-sign B_ii) is a Cartan involution.
  const double bscale = std::max(1.0, killing.size() ? killing.cwiseAbs().maxCoeff() : 0.0);
  const double bthreshold = tol * bscale * s.scale();
  double off_diagonal = 0.0;
  double spread = 0.0;
  const double magnitude = n ? std::abs(killing(0, 0)) : 0.0;
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j) off_diagonal = std::max(off_diagonal, std::abs(killing(i, j)));
    }
    spread = std::max(spread, std::abs(std::abs(killing(i, i)) - magnitude));
    theta(i, i) = killing(i, i) > 0 ? -1.0 : 1.0;
  }
  bool geps = semisimple.holds && off_diagonal <= bthreshold && spread <= bthreshold &&
              magnitude > bthreshold;
  double involution_residual = std::max(off_diagonal, spread);
  if (geps) {
    const auto check = check_cartan_involution(vertical, CartanInvolution{theta}, tol * s.scale());
    geps = check.valid;
    involution_residual = std::max(involution_residual, check.automorphism_residual);
  }

  auto& g = out.g_epsilon;
  g.claim = "vertical metric of g_epsilon type + conformal => minimal";
  g.premises = {closed, semisimple,
                {"vertical metric is a g_epsilon of a Cartan-Killing metric", geps,
                 involution_residual},
                conformal};
  g.conclusion = "minimal";
  g.conclusion_holds = c.minimal;
  g.conclusion_witness = c.minimal_witness;
  settle(g);
  return out;
}

TraceIdentityResidual trace_identity_residual(const FoliationSetup& s) {
  TraceIdentityResidual r;
  const auto n = s.vertical_dim();
  const Vector x = s.x();
  const Vector y = s.y();
  auto residual = [&](const Vector& e) {
    double value = ad_matrix(s.algebra, e).trace();
    for (std::size_t i = 0; i < n; ++i) {
      const Vector v = s.vertical(i);
      value -= s.eps(i) * s.metric(bracket(s.algebra, e, v), v);
    }
    value -= s.eps(s.x_index()) * s.metric(bracket(s.algebra, e, x), x);
    value -= s.eps(s.y_index()) * s.metric(bracket(s.algebra, e, y), y);
    return std::abs(value);
  };
  r.x = residual(x);
  r.y = residual(y);
  return r;
}

}  // namespace liefol
