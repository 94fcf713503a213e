#include "liefol/catalog.hpp"
#include "liefol/curvature.hpp"
#include "liefol/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace liefol;

namespace {

RiemannianFrame frame_of(const catalog::Preset& p) { return RiemannianFrame::from_metric(p.algebra, p.metric); }

catalog::Preset biinvariant_berger() {
  catalog::BergerParams p;
  p.lambda = 1.0;
  return catalog::berger(p);
}

double nabla(const ConnectionCoefficients& g, std::size_t i, std::size_t j, std::size_t k) { return g(i, j, k); }

/// Left-invariant metric from a random positive-definite matrix.
MetricTensor random_metric(std::size_t n, std::mt19937_64& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXd a = oracle::random_matrix(m, m, rng, 0.5);
  const Eigen::MatrixXd g = a * a.transpose() + Eigen::MatrixXd::Identity(m, m);
  return MetricTensor(0.5 * (g + g.transpose()));
}

}  // namespace

TEST_CASE("Levi-Civita examples") {
  const auto flat = levi_civita(RiemannianFrame::declared(catalog::abelian(3)));
  for (double v : flat.gamma) CHECK(v == 0.0);

  const auto su2 = levi_civita(frame_of(biinvariant_berger()));
  enum { A, B, C };
  CHECK(nabla(su2, A, B, C) == doctest::Approx(1.0));
  CHECK(nabla(su2, A, B, A) == 0.0);
  CHECK(nabla(su2, A, B, B) == 0.0);

  const auto sol = levi_civita(frame_of(catalog::solvable_control()));
  enum { V, X, Y };
  CHECK(nabla(sol, V, V, X) == doctest::Approx(1.0));
  CHECK(nabla(sol, V, V, V) == 0.0);
  CHECK(nabla(sol, V, X, V) == doctest::Approx(-1.0));
  for (std::size_t k = 0; k < 3; ++k) CHECK(nabla(sol, X, X, k) == 0.0);
}

TEST_CASE("sectional curvature examples") {
  const auto flat = RiemannianFrame::declared(catalog::abelian(4));
  CHECK(sectional_milnor(flat, 0, 3).sectional == 0.0);
  CHECK(sectional_direct(flat, 1, 2).sectional == 0.0);

  const auto su2 = RiemannianFrame::declared(catalog::su2().algebra);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      CHECK(sectional_milnor(su2, i, j).sectional == doctest::Approx(1.0));
      CHECK(sectional_direct(su2, i, j).sectional == doctest::Approx(1.0));
    }
  }

  const auto sol = frame_of(catalog::solvable_control());
  CHECK(sectional_milnor(sol, 1, 0).sectional == doctest::Approx(-1.0));
  CHECK(sectional_direct(sol, 1, 0).sectional == doctest::Approx(-1.0));

  const auto berger = frame_of(biinvariant_berger());
  CHECK(sectional_milnor(berger, 1, 2).sectional == doctest::Approx(1.0));
  CHECK(sectional_direct(berger, 1, 2).sectional == doctest::Approx(1.0));
  CHECK(to_string(sectional_direct(berger, 1, 2).method) == "direct");
  CHECK(to_string(sectional_milnor(berger, 1, 2).method) == "milnor");
}

TEST_CASE("curvature input errors") {
  const auto su2 = RiemannianFrame::declared(catalog::su2().algebra);
  CHECK_THROWS_AS(sectional_milnor(su2, 1, 1), InputError);
  CHECK_THROWS_AS(sectional_direct(su2, 0, 3), InputError);
  const auto sl2 = catalog::sl2r().preset.algebra;
  const MetricTensor killing(killing_form(sl2).matrix);
  CHECK_THROWS_AS(RiemannianFrame::from_metric(sl2, killing), UnsupportedSignatureError);
  const auto geps = catalog::berger_g_epsilon(catalog::default_berger_params());
  const auto s = adapted_frame(geps.algebra, geps.metric, geps.vertical);
  CHECK_THROWS_AS(oneill_leaf_curvature(s), UnsupportedSignatureError);
}

TEST_CASE("property: both curvature routes match the coordinate oracle for arbitrary metrics") {
  std::mt19937_64 rng(61);
  std::vector<LieAlgebra> algebras = {catalog::su2().algebra, catalog::sl2r().preset.algebra,
                                      catalog::heisenberg(), catalog::solvable_control().algebra,
                                      catalog::berger(catalog::default_berger_params()).algebra};
  for (const auto& L : algebras) {
    for (int t = 0; t < 4; ++t) {
      const auto g = random_metric(L.dim(), rng);
      const auto frame = RiemannianFrame::from_metric(L, g);
      const oracle::Connection conn(L, g.matrix());
      for (std::size_t i = 0; i < L.dim(); ++i) {
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
          const double expected = conn.sectional(frame.change().col(static_cast<Eigen::Index>(i)),
                                                 frame.change().col(static_cast<Eigen::Index>(j)));
          const double tol = 1e-9 * std::max(1.0, std::abs(expected)) * 100;
          CHECK(sectional_milnor(frame, i, j).sectional == doctest::Approx(expected).epsilon(tol));
          CHECK(sectional_direct(frame, i, j).sectional == doctest::Approx(expected).epsilon(tol));
        }
      }
    }
  }
}

TEST_CASE("property: connection is metric and torsion free") {
  std::mt19937_64 rng(67);
  const auto L = catalog::berger(catalog::random_berger_params(rng)).algebra;
  const auto frame = RiemannianFrame::declared(L);
  const auto gamma = levi_civita(frame);
  const auto n = L.dim();
  const double scale = std::max(1.0, L.max_abs_constant());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k) = 0
        CHECK(std::abs(gamma(i, j, k) + gamma(i, k, j)) < 1e-12 * scale);
        // nabla_i e_j - nabla_j e_i = [e_i, e_j]
        CHECK(std::abs(gamma(i, j, k) - gamma(j, i, k) - L.constant(i, j, k)) < 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("property: biinvariant metrics have K = |[e_i,e_j]|^2 / 4") {
  const LieAlgebra cases[] = {catalog::su2().algebra,
                              direct_sum(catalog::su2().algebra, catalog::su2().algebra),
                              direct_sum(catalog::su2().algebra, catalog::abelian(2))};
  for (const auto& L : cases) {
    const auto frame = RiemannianFrame::declared(L);
    for (std::size_t i = 0; i < L.dim(); ++i) {
      for (std::size_t j = i + 1; j < L.dim(); ++j) {
        const double expected =
            0.25 * bracket(L, basis_vector(L.dim(), i), basis_vector(L.dim(), j)).squaredNorm();
        CHECK(sectional_milnor(frame, i, j).sectional == doctest::Approx(expected));
        CHECK(sectional_direct(frame, i, j).sectional == doctest::Approx(expected));
      }
    }
  }
}

TEST_CASE("leaf curvature through O'Neill") {
  SUBCASE("rho = 1") {
    const auto p = catalog::berger(catalog::default_berger_params());
    const auto s = adapted_frame(p.algebra, p.metric, p.vertical);
    const auto leaf = oneill_leaf_curvature(s);
    CHECK(leaf.reliable);
    CHECK(leaf.riemannian_foliation);
    CHECK(leaf.leaf_curvature == doctest::Approx(-1.0));
    CHECK(leaf.minus_rho_squared == doctest::Approx(-1.0));
  }
  SUBCASE("rho = 0") {
    auto params = catalog::default_berger_params();
    params.rho = 0.0;
    const auto p = catalog::berger(params);
    const auto leaf = oneill_leaf_curvature(adapted_frame(p.algebra, p.metric, p.vertical));
    CHECK(leaf.leaf_curvature == doctest::Approx(0.0));
  }
  SUBCASE("sampled parameters") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 50; ++t) {
      const auto params = catalog::random_berger_params(rng);
      const auto p = catalog::berger(params);
      const auto leaf = oneill_leaf_curvature(adapted_frame(p.algebra, p.metric, p.vertical));
      const auto theta = catalog::berger_theta(params);
      CHECK(std::abs(leaf.horizontal_sectional + params.rho * params.rho + 0.75 * theta.squaredNorm()) < 1e-8);
      CHECK(std::abs(leaf.leaf_curvature + params.rho * params.rho) < 1e-8);
      CHECK(leaf.riemannian_relation_residual < 1e-9);
      CHECK(leaf.method_gap < 1e-9);
    }
  }
  SUBCASE("non-Riemannian foliation is flagged") {
    // [X, V] = V - X/2 leaves a horizontal part.
    const BracketEntry entries[] = {{0, 1, 0, -1.0}, {0, 1, 1, 0.5}};
    const auto L = LieAlgebra::from_entries(3, entries, {"V", "X", "Y"});
    REQUIRE(validate(L).passed);
    const auto leaf = oneill_leaf_curvature(adapted_frame(L, MetricTensor::identity(3), {0}));
    CHECK_FALSE(leaf.riemannian_foliation);
    CHECK_FALSE(leaf.reliable);
  }
}
