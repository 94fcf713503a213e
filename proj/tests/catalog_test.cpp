#include "liefol/catalog.hpp"
#include "liefol/errors.hpp"
#include "liefol/foliation.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace liefol;

TEST_CASE("su(2) and sl(2,R) presets") {
  const auto su2 = catalog::su2();
  CHECK(validate(su2.algebra).jacobi_residual == 0.0);
  CHECK(is_semisimple(su2.algebra).semisimple);

  const auto sl2 = catalog::sl2r();
  CHECK(validate(sl2.preset.algebra).passed);
  CHECK(is_semisimple(sl2.preset.algebra).semisimple);
  CHECK(signature(MetricTensor(killing_form(sl2.preset.algebra).matrix)) == Signature{2, 1});
  const auto ck = cartan_killing_metric(sl2.preset.algebra, sl2.theta);
  CHECK((ck.matrix() - 8.0 * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Berger family") {
  SUBCASE("lambda = 1 with everything else zero is su(2) plus a flat plane") {
    catalog::BergerParams p;
    const auto b = catalog::berger(p).algebra;
    const auto expected = direct_sum(catalog::su2().algebra, catalog::abelian(2));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 0; k < 5; ++k) CHECK(b.constant(i, j, k) == expected.constant(i, j, k));
  }
  SUBCASE("theta for lambda = 2, x3 = 1, rho = 1") {
    catalog::BergerParams p;
    p.lambda = 2.0;
    p.x3 = 1.0;
    p.rho = 1.0;
    const auto t = catalog::berger_theta(p);
    CHECK(t(0) == 0.0);
    CHECK(t(1) == 0.0);
    CHECK(t(2) == doctest::Approx(-1.0));
  }
  SUBCASE("vertical block is su(2) in the basis (lambda e1, e2, e3)") {
    catalog::BergerParams p;
    p.lambda = 2.5;
    const auto b = catalog::berger(p).algebra;
    const auto abc = change_basis(catalog::su2().algebra, Eigen::Vector3d(2.5, 1.0, 1.0).asDiagonal().toDenseMatrix());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) CHECK(b.constant(i, j, k) == doctest::Approx(abc.constant(i, j, k)));
  }
  SUBCASE("random parameters satisfy Jacobi") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 50; ++t) {
      const auto params = catalog::random_berger_params(rng);
      CHECK(params.lambda >= 0.2);
      CHECK(params.lambda <= 5.0);
      const auto L = catalog::berger(params).algebra;
      CHECK(validate(L).jacobi_residual < 1e-9);
      // independent triple-loop Jacobi on the basis
      double worst = 0.0;
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
          for (std::size_t k = 0; k < 5; ++k)
            worst = std::max(worst, oracle::jacobi(L, basis_vector(5, i), basis_vector(5, j), basis_vector(5, k)));
      CHECK(worst < 1e-9);
    }
  }
  SUBCASE("lambda must be positive") {
    catalog::BergerParams p;
    p.lambda = 0.0;
    CHECK_THROWS_AS(catalog::berger(p), InputError);
    p.lambda = -1.0;
    CHECK_THROWS_AS(catalog::berger(p), InputError);
  }
}

TEST_CASE("introductory table cases") {
  const auto cases = catalog::intro_table_cases();
  REQUIRE(cases.size() == 4);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    CHECK(validate(c.algebra).passed);
    const auto s = adapted_frame(c.algebra, c.metric, c.vertical);
    CHECK(s.vertical_closed);
  }
  auto vertical_semisimple = [](const catalog::Preset& c) {
    return is_semisimple(vertical_subalgebra(adapted_frame(c.algebra, c.metric, c.vertical))).semisimple;
  };
  const auto su2su2 = catalog::preset("intro-su2xsu2");
  CHECK(vertical_semisimple(su2su2));
  CHECK(classify(adapted_frame(su2su2.algebra, su2su2.metric, su2su2.vertical)).totally_geodesic);
  CHECK_FALSE(vertical_semisimple(catalog::preset("intro-su2xso2")));

  const auto sl2so2 = catalog::preset("intro-sl2rxso2");
  CHECK(sl2so2.vertical.size() == 4);
  CHECK(sl2so2.algebra.dim() == 6);
  const auto s = adapted_frame(sl2so2.algebra, sl2so2.metric, sl2so2.vertical);
  int positive = 0;
  for (std::size_t i = 0; i < 4; ++i) positive += s.eps(i) > 0;
  CHECK(positive == 4);
}

TEST_CASE("preset lookup") {
  for (const auto& name : catalog::preset_names()) {
    CAPTURE(name);
    const auto p = catalog::preset(name);
    CHECK(validate(p.algebra).passed);
  }
  CHECK(catalog::preset("berger-geps").name == "berger-geps");
  CHECK_THROWS_AS(catalog::preset("so(3)"), InputError);
}
