#include "liefol/catalog.hpp"

#include "liefol/errors.hpp"

namespace liefol::catalog {

namespace {

LieAlgebra su2_algebra() {
  const BracketEntry entries[] = {{0, 1, 2, 2.0}, {1, 2, 0, 2.0}, {0, 2, 1, -2.0}};
  return LieAlgebra::from_entries(3, entries, {"e1", "e2", "e3"});
}

LieAlgebra sl2r_algebra() {
  const BracketEntry entries[] = {{0, 1, 2, 2.0}, {0, 2, 1, -2.0}, {1, 2, 0, -2.0}};
  return LieAlgebra::from_entries(3, entries, {"e1", "e2", "e3"});
}

LieAlgebra so2_algebra() { return LieAlgebra(1, {"r"}); }

Preset trivial_extension(std::string name, const LieAlgebra& vertical) {
  const auto n = vertical.dim();
  const auto ambient = direct_sum(vertical, LieAlgebra(2, {"X", "Y"}));
  std::vector<std::size_t> vidx(n);
  for (std::size_t i = 0; i < n; ++i) vidx[i] = i;
  return {std::move(name), ambient, MetricTensor::identity(n + 2), std::move(vidx)};
}

}  // namespace

Preset su2() { return {"su2", su2_algebra(), MetricTensor::identity(3), {}}; }

Sl2r sl2r() {
  CartanInvolution theta{Eigen::Vector3d(1.0, -1.0, -1.0).asDiagonal()};
  return {{"sl2r", sl2r_algebra(), MetricTensor::identity(3), {}}, std::move(theta)};
}

LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

LieAlgebra heisenberg() {
  const BracketEntry entries[] = {{0, 1, 2, 1.0}};
  return LieAlgebra::from_entries(3, entries, {"e1", "e2", "e3"});
}

Eigen::Vector3d berger_theta(const BergerParams& p) {
  const double l = p.lambda;
  return 0.5 * Eigen::Vector3d(p.rho * p.z3 / l + l * (p.x3 * p.x6 - p.x4 * p.x5),
                               l * (p.rho * p.x5 - p.x3 * p.z4 + p.x4 * p.z3),
                               -l * (p.rho * p.x3 + p.z4 * p.x5 - p.z3 * p.x6));
}

Preset berger(const BergerParams& p) {
  if (!(p.lambda > 0.0)) throw InputError("Berger parameter lambda must be positive");
  enum : std::size_t { A, B, C, X, Y };
  const double l = p.lambda;
  const double l2 = l * l;
  const auto t = berger_theta(p);

  // Entries with i > j are written as their mirror with the sign flipped.
  const std::vector<BracketEntry> entries = {
      {A, B, C, 2.0 * l},
      {A, C, B, -2.0 * l},  // [C, A] = 2 lambda B
      {B, C, A, 2.0 / l},
      {A, X, B, -l2 * p.x3},
      {A, X, C, -l2 * p.x5},
      {A, Y, B, -l2 * p.x4},
      {A, Y, C, -l2 * p.x6},
      {B, X, A, p.x3},
      {B, X, C, p.z3},
      {B, Y, A, p.x4},
      {B, Y, C, p.z4},
      {C, X, A, p.x5},
      {C, X, B, -p.z3},
      {C, Y, A, p.x6},
      {C, Y, B, -p.z4},
      {X, Y, X, p.rho},
      {X, Y, A, t(0)},
      {X, Y, B, t(1)},
      {X, Y, C, t(2)},
  };
  return {"berger", LieAlgebra::from_entries(5, entries, {"A", "B", "C", "X", "Y"}),
          MetricTensor::identity(5), {A, B, C}};
}

BergerParams random_berger_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lambda(0.2, 5.0);
  std::uniform_real_distribution<double> other(-2.0, 2.0);
  BergerParams p;
  p.lambda = lambda(rng);
  p.x3 = other(rng);
  p.x4 = other(rng);
  p.x5 = other(rng);
  p.x6 = other(rng);
  p.z3 = other(rng);
  p.z4 = other(rng);
  p.rho = other(rng);
  return p;
}

Preset berger_g_epsilon(const BergerParams& p) {
  BergerParams q = p;
  q.lambda = 1.0;
  auto out = berger(q);
  out.name = "berger-geps";
  Eigen::VectorXd diag(5);
  diag << 1.0, -1.0, 1.0, 1.0, 1.0;
  out.metric = MetricTensor(diag.asDiagonal().toDenseMatrix());
  return out;
}

Preset solvable_control() {
  const BracketEntry entries[] = {{0, 1, 0, -1.0}};  // [V, X] = -V
  return {"solvable", LieAlgebra::from_entries(3, entries, {"V", "X", "Y"}),
          MetricTensor::identity(3), {0}};
}

std::vector<Preset> intro_table_cases() {
  return {
      trivial_extension("intro-su2xsu2", direct_sum(su2_algebra(), su2_algebra())),
      trivial_extension("intro-su2xsl2r", direct_sum(su2_algebra(), sl2r_algebra())),
      trivial_extension("intro-su2xso2", direct_sum(su2_algebra(), so2_algebra())),
      trivial_extension("intro-sl2rxso2", direct_sum(sl2r_algebra(), so2_algebra())),
  };
}

BergerParams default_berger_params() {
  BergerParams p;
  p.lambda = 2.0;
  p.x3 = 1.0;
  p.x4 = 0.5;
  p.x5 = -0.3;
  p.x6 = 0.7;
  p.z3 = 0.4;
  p.z4 = -0.2;
  p.rho = 1.0;
  return p;
}

std::vector<std::string> preset_names() {
  return {"su2",           "sl2r",           "heisenberg",     "berger",
          "berger-biinvariant", "berger-geps", "solvable",     "intro-su2xsu2",
          "intro-su2xsl2r", "intro-su2xso2", "intro-sl2rxso2"};
}

Preset preset(const std::string& name) {
  if (name == "su2") return su2();
  if (name == "sl2r") return sl2r().preset;
  if (name == "heisenberg") return {"heisenberg", heisenberg(), MetricTensor::identity(3), {}};
  if (name == "berger") return berger(default_berger_params());
  if (name == "berger-biinvariant") {
    auto p = default_berger_params();
    p.lambda = 1.0;
    auto out = berger(p);
    out.name = name;
    return out;
  }
  if (name == "berger-geps") return berger_g_epsilon(default_berger_params());
  if (name == "solvable") return solvable_control();
  for (auto& c : intro_table_cases()) {
    if (c.name == name) return c;
  }
  throw InputError("unknown preset '" + name + "'");
}

}  // namespace liefol::catalog
