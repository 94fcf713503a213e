#include "liefol/catalog.hpp"
#include "liefol/errors.hpp"
#include "liefol/foliation.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace liefol;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

catalog::Preset berger_with(double lambda, double x3, double rho = 0.0) {
  catalog::BergerParams p;
  p.lambda = lambda;
  p.x3 = x3;
  p.rho = rho;
  return catalog::berger(p);
}

FoliationSetup setup_of(const catalog::Preset& p, double tol = kDefaultTol) {
  return adapted_frame(p.algebra, p.metric, p.vertical, tol);
}

/// V central, [X0, Y0] = a X0 + b Y0.
catalog::Preset tilted_plane(double a, double b) {
  const BracketEntry entries[] = {{1, 2, 1, a}, {1, 2, 2, b}};
  return {"tilted", LieAlgebra::from_entries(3, entries, {"V", "X0", "Y0"}), MetricTensor::identity(3),
          {0}};
}

/// Two-dimensional abelian vertical with metric diag(1, -1); [X,V1] = V1, [X,V2] = -V2.
catalog::Preset lorentzian_vertical() {
  const BracketEntry entries[] = {{0, 2, 0, -1.0}, {1, 2, 1, 1.0}};
  Eigen::Vector4d d(1.0, -1.0, 1.0, 1.0);
  return {"lorentzian", LieAlgebra::from_entries(4, entries, {"V1", "V2", "X", "Y"}),
          MetricTensor(d.asDiagonal().toDenseMatrix()), {0, 1}};
}

/// Random basis change preserving span(vertical coordinates), applied to algebra and metric.
catalog::Preset scramble(const catalog::Preset& p, std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(p.algebra.dim());
  Eigen::MatrixXd change = Eigen::MatrixXd::Identity(n, n);
  std::vector<bool> vertical(p.algebra.dim(), false);
  for (auto v : p.vertical) vertical[v] = true;
  std::normal_distribution<double> d(0.0, 0.4);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r)
      if (!(vertical[static_cast<std::size_t>(c)] && !vertical[static_cast<std::size_t>(r)])) change(r, c) += d(rng);
  const Eigen::MatrixXd g = change.transpose() * p.metric.matrix() * change;
  return {p.name, change_basis(p.algebra, change), MetricTensor(0.5 * (g + g.transpose())), p.vertical};
}

std::vector<catalog::Preset> berger_samples(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<catalog::Preset> out;
  for (int t = 0; t < count; ++t) {
    auto params = catalog::random_berger_params(rng);
    out.push_back(catalog::berger(params));
    params.lambda = 1.0;
    out.push_back(catalog::berger(params));
    out.push_back(catalog::berger_g_epsilon(params));
  }
  return out;
}

}  // namespace

TEST_CASE("adapted frame on the Berger algebra keeps the given frame") {
  const auto p = catalog::berger(catalog::default_berger_params());
  const auto s = setup_of(p);
  CHECK(s.vertical_closed);
  CHECK(s.normalized);
  CHECK(max_abs(s.frame - Eigen::MatrixXd::Identity(5, 5)) < 1e-14);
  CHECK(coefficients(s).rho == doctest::Approx(1.0));
  CHECK(s.frame_algebra.basis_names() == std::vector<std::string>{"V1", "V2", "V3", "X", "Y"});

  auto q = catalog::default_berger_params();
  q.rho = -1.5;
  const auto flipped = setup_of(catalog::berger(q));
  CHECK(coefficients(flipped).rho == doctest::Approx(1.5));
}

TEST_CASE("adapted frame on an abelian algebra") {
  const catalog::Preset p{"abelian", catalog::abelian(4), MetricTensor::identity(4), {0, 1}};
  const auto s = setup_of(p);
  const auto c = coefficients(s);
  CHECK(c.rho == 0.0);
  CHECK(max_abs(c.x) == 0.0);
  CHECK(max_abs(c.y) == 0.0);
  CHECK(max_abs(c.theta) == 0.0);
  const auto f = second_fundamental_forms(s);
  CHECK(max_abs(f.bv_x) + max_abs(f.bv_y) + max_abs(f.bh_xx) + max_abs(f.bh_xy) + max_abs(f.bh_yy) == 0.0);
}

TEST_CASE("adapted frame rotation matches a brute-force angle search") {
  const std::pair<double, double> cases[] = {{3.0, 4.0}, {-1.0, 0.5}, {0.0, -2.0}, {0.7, 0.0}};
  for (const auto& [a, b] : cases) {
    const auto p = tilted_plane(a, b);
    const auto s = setup_of(p);
    const double rho = coefficients(s).rho;
    CHECK(rho == doctest::Approx(std::hypot(a, b)));

    // Scan the rotation angle for the zero of the Y-component with positive X-component.
    const Eigen::Vector3d x0(0, 1, 0), y0(0, 0, 1);
    double best = -1.0;
    double best_gap = 1e300;
    const int steps = 20000;
    for (int t = 0; t < steps; ++t) {
      const double phi = 2 * std::numbers::pi * t / steps;
      const Eigen::Vector3d x = std::cos(phi) * x0 + std::sin(phi) * y0;
      const Eigen::Vector3d y = -std::sin(phi) * x0 + std::cos(phi) * y0;
      const Eigen::VectorXd h = oracle::br(p.algebra, x, y);
      const double along_x = h.dot(x);
      const double along_y = std::abs(h.dot(y));
      if (along_x >= 0 && along_y < best_gap) {
        best_gap = along_y;
        best = along_x;
      }
    }
    CHECK(best == doctest::Approx(rho).epsilon(1e-3));
    // X is aligned with the horizontal bracket.
    const Eigen::VectorXd h = bracket(p.algebra, s.x(), s.y());
    CHECK((h - rho * s.x()).norm() < 1e-12);
  }
}

TEST_CASE("adapted frame input errors") {
  const auto p = catalog::berger(catalog::default_berger_params());
  CHECK_THROWS_AS(adapted_frame(p.algebra, p.metric, {0, 1}), InputError);
  CHECK_THROWS_AS(adapted_frame(p.algebra, p.metric, {0, 0, 1}), InputError);
  CHECK_THROWS_AS(adapted_frame(p.algebra, p.metric, {0, 1, 7}), InputError);
  Eigen::VectorXd d = Eigen::VectorXd::Ones(5);
  d(3) = 0.0;
  CHECK_THROWS_AS(adapted_frame(p.algebra, MetricTensor(d.asDiagonal().toDenseMatrix()), p.vertical),
                  DegenerateMetricError);
}

TEST_CASE("non-closed vertical span is recorded") {
  const auto su2 = catalog::su2();
  const catalog::Preset p{"x", direct_sum(su2.algebra, catalog::abelian(1)), MetricTensor::identity(4),
                          {0, 1}};
  const auto s = setup_of(p);
  CHECK_FALSE(s.vertical_closed);
  CHECK(s.closure_leak == doctest::Approx(2.0));
}

TEST_CASE("coefficients of the solvable control") {
  const auto s = setup_of(catalog::solvable_control());
  const auto c = coefficients(s);
  CHECK(c.x(0, 0) == doctest::Approx(1.0));
  CHECK(c.y(0, 0) == 0.0);
  CHECK(c.rho == 0.0);
  CHECK(c.reconstruction_residual < 1e-15);
}

TEST_CASE("Berger classification") {
  SUBCASE("lambda = 1") {
    auto params = catalog::default_berger_params();
    params.lambda = 1.0;
    const auto s = setup_of(catalog::berger(params));
    const auto f = second_fundamental_forms(s);
    CHECK(max_abs(f.bv_x) + max_abs(f.bv_y) < 1e-14);
    CHECK(max_abs(f.bh_xx) + max_abs(f.bh_xy) + max_abs(f.bh_yy) < 1e-14);
    const auto c = classify(s);
    CHECK(c.conformal);
    CHECK(c.semi_riemannian);
    CHECK(c.minimal);
    CHECK(c.totally_geodesic);
  }
  SUBCASE("lambda = 2, x3 = 1") {
    const auto c = classify(setup_of(berger_with(2.0, 1.0)));
    CHECK(c.conformal);
    CHECK(c.semi_riemannian);
    CHECK(c.minimal);
    CHECK_FALSE(c.totally_geodesic);
    CHECK(c.totally_geodesic_witness == doctest::Approx(3.0));
  }
  SUBCASE("solvable control") {
    const auto c = classify(setup_of(catalog::solvable_control()));
    CHECK(c.conformal);
    CHECK(c.semi_riemannian);
    CHECK_FALSE(c.minimal);
    CHECK(c.minimal_witness == doctest::Approx(1.0));
  }
}

TEST_CASE("minimality uses the metric trace on indefinite leaves") {
  const auto p = lorentzian_vertical();
  const auto s = setup_of(p);
  const auto c = classify(s);
  const auto coeff = coefficients(s);
  CHECK(c.minimal);
  CHECK_FALSE(c.totally_geodesic);
  // The causality-weighted sum of the diagonal coefficients does not vanish here.
  double weighted = 0.0;
  for (std::size_t i = 0; i < 2; ++i) weighted += s.eps(i) * coeff.x(i, i);
  CHECK(std::abs(weighted) == doctest::Approx(2.0));
  const auto o = oracle::classify(p.algebra, p.metric.matrix(), p.vertical, 1e-9);
  CHECK(o.minimal);
  CHECK_FALSE(o.totally_geodesic);
}

TEST_CASE("structural checks") {
  const auto berger = setup_of(catalog::berger(catalog::default_berger_params()));
  const auto r = structural_checks(berger);
  CHECK(r.bracket_closure_pass);
  CHECK(r.bracket_closure_residual < 1e-14);
  CHECK_FALSE(r.cross_factor_residual.has_value());

  const auto su2su2 = catalog::preset("intro-su2xsu2");
  const auto s = setup_of(su2su2);
  const auto f = structural_checks(s, kDefaultTol, std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4, 5}});
  REQUIRE(f.cross_factor_residual.has_value());
  CHECK(*f.cross_factor_residual == 0.0);
  CHECK(*f.cross_factor_pass);

  CHECK_THROWS_AS(structural_checks(s, kDefaultTol, std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3, 4, 5}}),
                  InputError);
  CHECK_THROWS_AS(structural_checks(s, kDefaultTol, std::vector<std::vector<std::size_t>>{{0, 1, 2}}),
                  InputError);
  CHECK_THROWS_AS(structural_checks(s, kDefaultTol, std::vector<std::vector<std::size_t>>{{0, 1, 2}, {2, 3, 4, 5}}),
                  InputError);

  const catalog::Preset flat{"flat", catalog::abelian(4), MetricTensor::identity(4), {0, 1}};
  CHECK(structural_checks(setup_of(flat)).bracket_closure_pass);
}

TEST_CASE("minimality theorem harness") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 10; ++t) {
    const auto p = catalog::berger(catalog::random_berger_params(rng));
    const auto r = verify_theorem_minimal(p.algebra, p.metric, p.vertical);
    CHECK(r.outcome == TheoremOutcome::Verified);
  }
  const auto control = catalog::solvable_control();
  const auto r = verify_theorem_minimal(control.algebra, control.metric, control.vertical);
  CHECK(r.outcome == TheoremOutcome::PremisesFail);
  CHECK_FALSE(r.conclusion_holds);
  CHECK(to_string(r.outcome) == "premises-fail");

  const auto flat = verify_theorem_minimal(catalog::abelian(4), MetricTensor::identity(4), {0, 1});
  CHECK(flat.outcome == TheoremOutcome::PremisesFail);
  CHECK(flat.conclusion_holds);
}

TEST_CASE("totally geodesic theorem harness") {
  auto params = catalog::default_berger_params();
  params.lambda = 1.0;
  const auto one = catalog::berger(params);
  const auto r1 = verify_theorem_totally_geodesic(one.algebra, one.metric, one.vertical);
  CHECK(r1.killing.outcome == TheoremOutcome::Verified);
  CHECK(r1.killing_scale == doctest::Approx(1.0 / 8.0));

  const auto two = catalog::berger(catalog::default_berger_params());
  const auto r2 = verify_theorem_totally_geodesic(two.algebra, two.metric, two.vertical);
  CHECK(r2.killing.outcome == TheoremOutcome::PremisesFail);
  CHECK_FALSE(r2.killing.conclusion_holds);

  // su(2) + su(2) with g = -B/8 on each factor.
  const auto trivial = catalog::preset("intro-su2xsu2");
  const auto r3 = verify_theorem_totally_geodesic(trivial.algebra, trivial.metric, trivial.vertical);
  CHECK(r3.killing.outcome == TheoremOutcome::Verified);
  CHECK(r3.killing.conclusion_holds);

  const auto geps = catalog::berger_g_epsilon(catalog::default_berger_params());
  const auto r4 = verify_theorem_totally_geodesic(geps.algebra, geps.metric, geps.vertical);
  CHECK(r4.g_epsilon.outcome == TheoremOutcome::Verified);
}

TEST_CASE("property: classification agrees with the coordinate oracle") {
  std::mt19937_64 rng(7);
  auto cases = berger_samples(131, 8);
  cases.push_back(catalog::solvable_control());
  cases.push_back(lorentzian_vertical());
  cases.push_back(catalog::preset("intro-su2xsl2r"));
  const auto n_base = cases.size();
  for (std::size_t i = 0; i < n_base; ++i) cases.push_back(scramble(cases[i], rng));
  for (const auto& p : cases) {
    CAPTURE(p.name);
    const auto c = classify(setup_of(p, 1e-8), 1e-8);
    const auto o = oracle::classify(p.algebra, p.metric.matrix(), p.vertical, 1e-8);
    CHECK(c.conformal == o.conformal);
    CHECK(c.semi_riemannian == o.riemannian);
    CHECK(c.minimal == o.minimal);
    CHECK(c.totally_geodesic == o.totally_geodesic);
  }
}

TEST_CASE("property: flag implications, trace identity, reconstruction") {
  for (const auto& p : berger_samples(151, 20)) {
    const auto s = setup_of(p);
    const auto c = classify(s);
    CHECK((!c.totally_geodesic || c.minimal));
    CHECK((!c.semi_riemannian || c.conformal));
    const auto t = trace_identity_residual(s);
    CHECK(std::max(t.x, t.y) < 1e-9);
    const auto coeff = coefficients(s);
    if (structural_checks(s).bracket_closure_pass) CHECK(coeff.reconstruction_residual < 1e-9 * s.scale());
  }
}

TEST_CASE("property: semisimple vertical and conformal imply Riemannian") {
  for (const auto& p : berger_samples(171, 20)) {
    const auto s = setup_of(p);
    const auto c = classify(s);
    if (is_semisimple(vertical_subalgebra(s)).semisimple && c.conformal) {
      const auto f = second_fundamental_forms(s);
      CHECK(max_abs(f.bh_xx) + max_abs(f.bh_xy) + max_abs(f.bh_yy) < 1e-9 * s.scale());
    }
  }
}

TEST_CASE("property: g_epsilon vertical metrics have vanishing diagonal coefficients") {
  std::mt19937_64 rng(191);
  for (int t = 0; t < 20; ++t) {
    const auto p = catalog::berger_g_epsilon(catalog::random_berger_params(rng));
    const auto s = setup_of(p);
    REQUIRE(classify(s).conformal);
    const auto coeff = coefficients(s);
    CHECK(max_abs(coeff.x.diagonal()) < 1e-9);
    CHECK(max_abs(coeff.y.diagonal()) < 1e-9);
  }
}

TEST_CASE("property: flags are invariant under vertical and horizontal frame changes") {
  std::mt19937_64 rng(211);
  auto cases = berger_samples(223, 5);
  cases.push_back(catalog::solvable_control());
  cases.push_back(lorentzian_vertical());
  for (const auto& p : cases) {
    const auto ref = classify(setup_of(p, 1e-8), 1e-8);
    for (int t = 0; t < 10; ++t) {
      const auto q = scramble(p, rng);
      const auto c = classify(setup_of(q, 1e-8), 1e-8);
      CHECK(c.conformal == ref.conformal);
      CHECK(c.semi_riemannian == ref.semi_riemannian);
      CHECK(c.minimal == ref.minimal);
      CHECK(c.totally_geodesic == ref.totally_geodesic);
    }
  }
}
