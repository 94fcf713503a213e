#pragma once

#include "liefol/lie_core.hpp"
#include "liefol/semi_metric.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace liefol::catalog {

/// An algebra with a metric and, for foliation cases, the vertical indices.
struct Preset {
  std::string name;
  LieAlgebra algebra;
  MetricTensor metric;
  std::vector<std::size_t> vertical;
};

/// su(2) on the matrices e1 = [[0,-1],[1,0]], e2 = diag(i,-i), e3 = [[0,i],[i,0]]:
/// [e1,e2] = 2e3, [e2,e3] = 2e1, [e3,e1] = 2e2. Metric (-B)/8 = identity.
Preset su2();

struct Sl2r {
  Preset preset;
  CartanInvolution theta;
};

/// sl(2,R) with e1 = rotation, e2 = diag(1,-1), e3 = antidiag(1,1); theta = diag(1,-1,-1).
/// Metric is the Cartan-Killing metric -B(., theta .) / 8 = identity.
Sl2r sl2r();

LieAlgebra abelian(std::size_t dim);
/// [e1, e2] = e3.
LieAlgebra heisenberg();

/// Frame (A, B, C, X, Y) of the five-dimensional Berger extension of su(2).
struct BergerParams {
  double lambda = 1.0;
  double x3 = 0.0;
  double x4 = 0.0;
  double x5 = 0.0;
  double x6 = 0.0;
  double z3 = 0.0;
  double z4 = 0.0;
  double rho = 0.0;
};

/// (theta1, theta2, theta3): the vertical part of [X, Y].
Eigen::Vector3d berger_theta(const BergerParams& p);

/// Throws InputError unless lambda > 0. Metric is the identity (the frame is
/// declared orthonormal); vertical = {A, B, C}.
Preset berger(const BergerParams& p);

/// lambda uniform in [0.2, 5], the other parameters uniform in [-2, 2].
BergerParams random_berger_params(std::mt19937_64& rng);

/// Berger brackets with lambda = 1 and the vertical metric diag(1, -1, 1): a g_epsilon
/// of the Cartan-Killing metric on su(2), Riemannian on the horizontal plane.
Preset berger_g_epsilon(const BergerParams& p);

/// Three-dimensional solvable control: [X, V] = V on (V, X, Y), identity metric, vertical = {V}.
Preset solvable_control();

/// su(2)+su(2), su(2)+sl(2,R), su(2)+so(2), sl(2,R)+so(2), each extended by an
/// abelian horizontal plane with zero mixed brackets. Metrics are the normalised
/// Cartan-Killing metrics (identity). Order: compact semisimple, non-compact
/// semisimple, compact non-semisimple, non-compact non-semisimple.
std::vector<Preset> intro_table_cases();

/// Names accepted by preset().
std::vector<std::string> preset_names();

/// Throws InputError on an unknown name.
Preset preset(const std::string& name);

/// Default parameters used by the "berger" preset.
BergerParams default_berger_params();

}  // namespace liefol::catalog
