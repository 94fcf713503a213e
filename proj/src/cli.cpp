#include "liefol/cli.hpp"

#include "liefol/catalog.hpp"
#include "liefol/curvature.hpp"
#include "liefol/document.hpp"
#include "liefol/errors.hpp"
#include "liefol/foliation.hpp"
#include "liefol/lie_core.hpp"
#include "liefol/paper_suite.hpp"
#include "liefol/semi_metric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

namespace liefol::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

enum class Status { Pass, Fail, NotApplicable };

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
  }
  return "fail";
}

Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

struct Globals {
  double tol = kDefaultTol;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  bool timings = false;
};

struct Report {
  std::string command;
  std::vector<std::string> arguments;
  std::string input_digest;
  double tolerance = kDefaultTol;
  std::vector<std::string> notes;
  ordered_json checks = ordered_json::array();
  ordered_json properties = ordered_json::object();
  ordered_json timings = ordered_json::object();
  bool failed = false;

  void check(const std::string& name, Status status, ordered_json witness) {
    if (status == Status::Fail) failed = true;
    checks.push_back({{"name", name}, {"status", status_name(status)}, {"witness", std::move(witness)}});
  }
};

std::string digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json to_json(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json to_json_vec(const Eigen::VectorXd& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw InputError(what + ": expected comma-separated non-negative integers, got '" + text + "'");
    }
    out.push_back(static_cast<std::size_t>(std::stoull(item)));
  }
  if (out.empty()) throw InputError(what + ": empty index list");
  return out;
}

std::vector<std::vector<std::size_t>> parse_factors(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) out.push_back(parse_indices(group, "--factors"));
  return out;
}

void check_range(const std::vector<std::size_t>& idx, std::size_t dim, const std::string& what) {
  for (auto i : idx) {
    if (i >= dim) {
      throw InputError(what + ": index " + std::to_string(i) + " out of range for dimension " +
                       std::to_string(dim));
    }
  }
}

struct Input {
  AlgebraDocument doc;
  std::string digest;
};

Input load_input(const std::string& file, const std::string& preset_name, Report& report) {
  if (!file.empty() && !preset_name.empty()) {
    throw InputError("give either a document or --preset, not both");
  }
  std::string text;
  if (!preset_name.empty()) {
    text = emit_document(to_document(catalog::preset(preset_name)));
    report.notes.push_back("input is the catalog preset '" + preset_name + "'");
  } else if (file.empty()) {
    throw InputError("missing input document (path, '-' for stdin, or --preset NAME)");
  } else if (file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw InputError("cannot read '" + file + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Input out{parse_document(text), digest(text)};
  if (!out.doc.metric) report.notes.push_back("metric omitted; identity assumed");
  report.input_digest = out.digest;
  return out;
}

ordered_json theorem_witness(const TheoremReport& t) {
  ordered_json premises = ordered_json::array();
  for (const auto& p : t.premises) {
    premises.push_back({{"name", p.name}, {"holds", p.holds}, {"witness", p.witness}});
  }
  return {{"claim", t.claim},
          {"outcome", to_string(t.outcome)},
          {"premises", std::move(premises)},
          {"conclusion", t.conclusion},
          {"conclusion_holds", t.conclusion_holds},
          {"conclusion_witness", t.conclusion_witness}};
}

Status theorem_status(const TheoremReport& t) {
  switch (t.outcome) {
    case TheoremOutcome::Verified: return Status::Pass;
    case TheoremOutcome::Contradiction: return Status::Fail;
    case TheoremOutcome::PremisesFail: return Status::NotApplicable;
  }
  return Status::Fail;
}

bool check_jacobi(const LieAlgebra& algebra, double tol, Report& report) {
  const auto v = validate(algebra, tol);
  report.check("jacobi identity", pass_if(v.passed),
               {{"residual", v.jacobi_residual},
                {"threshold", v.threshold},
                {"triple", {v.witness[0], v.witness[1], v.witness[2]}}});
  if (!v.passed) report.notes.push_back("brackets do not define a Lie algebra; remaining claims skipped");
  return v.passed;
}

/// Shared by `foliation` and `berger`. Returns the setup when the vertical
/// span is a subalgebra.
std::optional<FoliationSetup> analyze_foliation(
    const LieAlgebra& algebra, const MetricTensor& metric, const std::vector<std::size_t>& vertical,
    const std::optional<std::vector<std::vector<std::size_t>>>& factors, double tol, Report& report) {
  auto setup = adapted_frame(algebra, metric, vertical, tol);
  const double threshold = tol * setup.scale();

  ordered_json frame;
  frame["vertical_indices"] = vertical;
  frame["causalities"] = setup.causalities;
  frame["vectors"] = to_json(setup.frame.transpose());
  frame["names"] = setup.frame_algebra.basis_names();
  report.properties["frame"] = std::move(frame);

  report.check("vertical subalgebra", pass_if(setup.vertical_closed),
               {{"closure_leak", setup.closure_leak}, {"threshold", threshold}});
  if (!setup.vertical_closed) {
    report.notes.push_back("vertical span is not a subalgebra; foliation claims skipped");
    return std::nullopt;
  }
  if (!setup.normalized) {
    report.notes.push_back("horizontal part of [X, Y] is not a multiple of a non-null X; rho is not normalized");
  }
  report.check("adapted frame normalization",
               setup.normalized ? Status::Pass : Status::NotApplicable,
               {{"leak", setup.normalization_leak}, {"threshold", threshold}});

  const auto coeff = coefficients(setup);
  const double recon_threshold =
      threshold * std::pow(std::max(1.0, setup.frame.cwiseAbs().maxCoeff()), 2) *
      static_cast<double>(algebra.dim());
  // The coefficients only describe the brackets when [V, H] has no horizontal part.
  const bool reconstructible = std::max(coeff.horizontal_leak_x, coeff.horizontal_leak_y) <= threshold;
  report.check("coefficient reconstruction",
               reconstructible ? pass_if(coeff.reconstruction_residual <= recon_threshold)
                               : Status::NotApplicable,
               {{"residual", coeff.reconstruction_residual}, {"threshold", recon_threshold}});
  report.properties["coefficients"] = {{"x", to_json(coeff.x)},
                                       {"y", to_json(coeff.y)},
                                       {"rho", coeff.rho},
                                       {"theta", to_json_vec(coeff.theta)},
                                       {"horizontal_leak_x", coeff.horizontal_leak_x},
                                       {"horizontal_leak_y", coeff.horizontal_leak_y},
                                       {"xy_leak", coeff.xy_leak}};

  const auto forms = second_fundamental_forms(setup);
  report.properties["second_fundamental_forms"] = {{"bv_x", to_json(forms.bv_x)},
                                                   {"bv_y", to_json(forms.bv_y)},
                                                   {"bh_xx", to_json_vec(forms.bh_xx)},
                                                   {"bh_xy", to_json_vec(forms.bh_xy)},
                                                   {"bh_yy", to_json_vec(forms.bh_yy)}};

  const auto c = classify(setup, tol);
  report.properties["classification"] = {
      {"conformal", c.conformal},
      {"semi_riemannian", c.semi_riemannian},
      {"minimal", c.minimal},
      {"totally_geodesic", c.totally_geodesic},
      {"conformal_witness", c.conformal_witness},
      {"semi_riemannian_witness", c.semi_riemannian_witness},
      {"minimal_witness", c.minimal_witness},
      {"totally_geodesic_witness", c.totally_geodesic_witness},
      {"threshold", c.threshold}};
  report.check("connection and coefficient routes agree", pass_if(c.route_disagreement <= c.threshold),
               {{"disagreement", c.route_disagreement}, {"threshold", c.threshold}});

  const auto trace = trace_identity_residual(setup);
  const double trace_threshold = recon_threshold;
  report.check("trace identity", pass_if(std::max(trace.x, trace.y) <= trace_threshold),
               {{"x", trace.x}, {"y", trace.y}, {"threshold", trace_threshold}});

  const auto structural = structural_checks(setup, tol, factors);
  {
    ordered_json w = {{"residual", structural.bracket_closure_residual},
                      {"threshold", structural.threshold}};
    report.check("conformal => [[V,V],H] has no horizontal part",
                 c.conformal ? pass_if(structural.bracket_closure_pass) : Status::NotApplicable,
                 std::move(w));
  }
  if (structural.cross_factor_residual) {
    ordered_json w = {{"residual", *structural.cross_factor_residual},
                      {"threshold", structural.threshold}};
    report.check("conformal => [V_k, H] stays in V_k",
                 c.conformal ? pass_if(*structural.cross_factor_pass) : Status::NotApplicable,
                 std::move(w));
  }

  const auto minimal = verify_theorem_minimal(algebra, metric, vertical, tol);
  report.check("theorem: semisimple vertical + conformal => minimal", theorem_status(minimal),
               theorem_witness(minimal));
  const auto geodesic = verify_theorem_totally_geodesic(algebra, metric, vertical, tol);
  {
    auto w = theorem_witness(geodesic.killing);
    w["killing_scale"] = geodesic.killing_scale;
    w["killing_fit_residual"] = geodesic.killing_fit_residual;
    report.check("theorem: Killing vertical metric + conformal => totally geodesic",
                 theorem_status(geodesic.killing), std::move(w));
  }
  report.check("theorem: g_epsilon vertical metric + conformal => minimal",
               theorem_status(geodesic.g_epsilon), theorem_witness(geodesic.g_epsilon));
  return setup;
}

void add_leaf(const FoliationSetup& setup, double tol, Report& report) {
  const auto leaf = oneill_leaf_curvature(setup, tol);
  const double threshold = tol * setup.scale() * setup.scale();
  report.properties["leaf"] = {{"horizontal_sectional", leaf.horizontal_sectional},
                               {"vertical_term", leaf.vertical_term},
                               {"leaf_curvature", leaf.leaf_curvature},
                               {"rho", leaf.rho},
                               {"minus_rho_squared", leaf.minus_rho_squared},
                               {"method_gap", leaf.method_gap},
                               {"riemannian_relation_residual", leaf.riemannian_relation_residual},
                               {"riemannian_foliation", leaf.riemannian_foliation}};
  const double gap = std::abs(leaf.leaf_curvature - leaf.minus_rho_squared);
  if (!leaf.reliable) {
    report.notes.push_back("foliation is not Riemannian; K_L = -rho^2 is not claimed");
  }
  report.check("leaf curvature equals -rho^2",
               leaf.reliable ? pass_if(gap <= threshold) : Status::NotApplicable,
               {{"difference", gap}, {"threshold", threshold}});
  report.check("closed formula and direct route agree on (X, Y)", pass_if(leaf.method_gap <= threshold),
               {{"gap", leaf.method_gap}, {"threshold", threshold}});
}

// ---------------------------------------------------------------------------

void run_check(const Input& in, const Globals& g, Report& report) {
  const auto algebra = in.doc.algebra();
  report.properties["dimension"] = algebra.dim();
  report.properties["basis_names"] = algebra.basis_names();
  if (!check_jacobi(algebra, g.tol, report)) return;

  const auto killing = killing_form(algebra);
  const auto ss = is_semisimple(algebra, g.tol);
  report.properties["killing_form"] = to_json(killing.matrix);
  report.properties["semisimple"] = {{"semisimple", ss.semisimple},
                                     {"min_singular_value", ss.min_singular_value},
                                     {"max_singular_value", ss.max_singular_value}};

  const auto metric = in.doc.metric_tensor();
  try {
    const auto sig = signature(metric, g.tol);
    report.properties["signature"] = {{"positive", sig.positive}, {"negative", sig.negative}};
    report.check("metric non-degenerate", Status::Pass,
                 {{"positive", sig.positive}, {"negative", sig.negative}});
  } catch (const DegenerateMetricError& e) {
    report.check("metric non-degenerate", Status::Fail, {{"message", e.what()}});
  }
  if (in.doc.vertical) report.notes.push_back("document lists vertical indices; see the foliation command");
}

void run_foliation(const Input& in, const std::string& vertical_text, const std::string& factors_text,
                   const Globals& g, Report& report) {
  const auto algebra = in.doc.algebra();
  std::vector<std::size_t> vertical;
  if (!vertical_text.empty()) {
    vertical = parse_indices(vertical_text, "--vertical");
  } else if (in.doc.vertical) {
    vertical = *in.doc.vertical;
  } else {
    throw InputError("no vertical indices: pass --vertical or add \"vertical\" to the document");
  }
  check_range(vertical, algebra.dim(), "--vertical");
  std::optional<std::vector<std::vector<std::size_t>>> factors;
  if (!factors_text.empty()) {
    factors = parse_factors(factors_text);
    for (const auto& f : *factors) check_range(f, algebra.dim(), "--factors");
  }
  if (!check_jacobi(algebra, g.tol, report)) return;
  analyze_foliation(algebra, in.doc.metric_tensor(), vertical, factors, g.tol, report);
}

void run_curvature(const Input& in, const std::string& plane_text, bool leaf,
                   const std::string& vertical_text, const Globals& g, Report& report) {
  const auto algebra = in.doc.algebra();
  if (!check_jacobi(algebra, g.tol, report)) return;
  const auto metric = in.doc.metric_tensor();
  const auto frame = RiemannianFrame::from_metric(algebra, metric, g.tol);
  const auto n = frame.dim();
  report.notes.push_back("plane indices refer to the orthonormal frame obtained from the coordinate basis");
  report.properties["frame"] = {{"vectors", to_json(frame.change().transpose())}};

  std::vector<std::pair<std::size_t, std::size_t>> planes;
  if (!plane_text.empty()) {
    const auto idx = parse_indices(plane_text, "--plane");
    if (idx.size() != 2 || idx[0] == idx[1]) throw InputError("--plane: expected two distinct indices");
    check_range(idx, n, "--plane");
    planes.emplace_back(idx[0], idx[1]);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) planes.emplace_back(i, j);
    }
  }

  const double scale = std::max(1.0, frame.constants().max_abs_constant());
  const double threshold = g.tol * scale * scale;
  double worst = 0.0;
  ordered_json out = ordered_json::array();
  for (const auto& [i, j] : planes) {
    const double k1 = sectional_milnor(frame, i, j).sectional;
    const double k2 = sectional_direct(frame, i, j).sectional;
    worst = std::max(worst, std::abs(k1 - k2));
    out.push_back({{"i", i}, {"j", j}, {"milnor", k1}, {"direct", k2}});
  }
  report.properties["sectional"] = std::move(out);
  report.check("closed formula and direct route agree", pass_if(worst <= threshold),
               {{"max_gap", worst}, {"threshold", threshold}});

  if (!leaf) return;
  std::vector<std::size_t> vertical;
  if (!vertical_text.empty()) {
    vertical = parse_indices(vertical_text, "--vertical");
  } else if (in.doc.vertical) {
    vertical = *in.doc.vertical;
  } else {
    throw InputError("--leaf needs vertical indices: pass --vertical or add \"vertical\" to the document");
  }
  check_range(vertical, algebra.dim(), "--vertical");
  const auto setup = adapted_frame(algebra, metric, vertical, g.tol);
  report.check("vertical subalgebra", pass_if(setup.vertical_closed),
               {{"closure_leak", setup.closure_leak}, {"threshold", g.tol * setup.scale()}});
  if (!setup.vertical_closed) {
    report.notes.push_back("vertical span is not a subalgebra; leaf curvature skipped");
    return;
  }
  add_leaf(setup, g.tol, report);
}

ordered_json params_json(const catalog::BergerParams& p) {
  return {{"lambda", p.lambda}, {"x3", p.x3}, {"x4", p.x4}, {"x5", p.x5}, {"x6", p.x6},
          {"z3", p.z3},         {"z4", p.z4}, {"rho", p.rho}};
}

bool any_x(const catalog::BergerParams& p) {
  return p.x3 != 0.0 || p.x4 != 0.0 || p.x5 != 0.0 || p.x6 != 0.0;
}

void berger_expectations(const catalog::BergerParams& p, const FoliationClassification& c,
                         double tol, Report& report) {
  report.check("Berger: conformal", pass_if(c.conformal),
               {{"witness", c.conformal_witness}, {"threshold", c.threshold}});
  report.check("Berger: Riemannian", pass_if(c.semi_riemannian),
               {{"witness", c.semi_riemannian_witness}, {"threshold", c.threshold}});
  report.check("Berger: minimal", pass_if(c.minimal),
               {{"witness", c.minimal_witness}, {"threshold", c.threshold}});
  const bool lambda_one = std::abs(p.lambda - 1.0) <= tol;
  report.check("Berger: totally geodesic iff lambda = 1",
               any_x(p) ? pass_if(c.totally_geodesic == lambda_one) : Status::NotApplicable,
               {{"totally_geodesic", c.totally_geodesic},
                {"lambda", p.lambda},
                {"witness", c.totally_geodesic_witness},
                {"threshold", c.threshold}});
}

void run_berger_single(const catalog::BergerParams& p, const std::string& emit_path, const Globals& g,
                       Report& report) {
  const auto preset = catalog::berger(p);
  const auto text = emit_document(to_document(preset));
  report.input_digest = digest(text);
  report.properties["parameters"] = params_json(p);
  report.properties["theta"] = to_json_vec(catalog::berger_theta(p));
  if (!emit_path.empty()) {
    std::ofstream out(emit_path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write '" + emit_path + "'");
    report.notes.push_back("document written to " + emit_path);
  }
  if (!check_jacobi(preset.algebra, g.tol, report)) return;
  const auto setup =
      analyze_foliation(preset.algebra, preset.metric, preset.vertical, std::nullopt, g.tol, report);
  if (!setup) return;
  berger_expectations(p, classify(*setup, g.tol), g.tol, report);
  add_leaf(*setup, g.tol, report);
}

void run_berger_sweep(std::size_t draws, const Globals& g, Report& report) {
  std::mt19937_64 rng(g.seed);
  double jacobi = 0.0;
  double leaf_gap = 0.0;
  double method_gap = 0.0;
  std::size_t geodesic = 0;
  std::size_t mismatches = 0;
  std::size_t unreliable = 0;
  ordered_json first_mismatch;
  for (std::size_t s = 0; s < draws; ++s) {
    const auto p = catalog::random_berger_params(rng);
    const auto preset = catalog::berger(p);
    jacobi = std::max(jacobi, validate(preset.algebra, g.tol).jacobi_residual);
    const auto setup = adapted_frame(preset.algebra, preset.metric, preset.vertical, g.tol);
    const auto c = classify(setup, g.tol);
    const bool lambda_one = std::abs(p.lambda - 1.0) <= g.tol;
    const bool ok = c.conformal && c.semi_riemannian && c.minimal &&
                    (!any_x(p) || c.totally_geodesic == lambda_one);
    if (c.totally_geodesic) ++geodesic;
    if (!ok && mismatches++ == 0) first_mismatch = params_json(p);
    const auto leaf = oneill_leaf_curvature(setup, g.tol);
    if (!leaf.reliable) ++unreliable;
    // Relative to the squared constant scale, as in the single-setup checks.
    const double scale2 = setup.scale() * setup.scale();
    leaf_gap = std::max(leaf_gap, std::abs(leaf.leaf_curvature - leaf.minus_rho_squared) / scale2);
    method_gap = std::max(method_gap, leaf.method_gap / scale2);
  }
  report.input_digest = digest("berger-sweep:" + std::to_string(g.seed) + ":" + std::to_string(draws));
  report.notes.push_back("sweep draws lambda in [0.2, 5] and the other parameters in [-2, 2]");
  report.properties["draws"] = draws;
  report.properties["seed"] = g.seed;
  report.properties["totally_geodesic_count"] = geodesic;

  report.check("jacobi identity over sweep", pass_if(jacobi <= g.tol),
               {{"max_residual", jacobi}, {"threshold", g.tol}});
  ordered_json w = {{"mismatches", mismatches}};
  if (mismatches > 0) w["first_mismatch"] = std::move(first_mismatch);
  report.check("Berger classification over sweep", pass_if(mismatches == 0), std::move(w));
  report.check("leaf curvature equals -rho^2 over sweep", pass_if(unreliable == 0 && leaf_gap <= g.tol),
               {{"max_relative_difference", leaf_gap}, {"non_riemannian", unreliable}, {"threshold", g.tol}});
  report.check("closed formula and direct route agree over sweep", pass_if(method_gap <= g.tol),
               {{"max_relative_gap", method_gap}, {"threshold", g.tol}});
}

void run_verify(const std::string& suite, const Globals& g, Report& report) {
  if (suite != "paper") throw InputError("unknown suite '" + suite + "' (available: paper)");
  SuiteOptions options;
  options.samples = g.samples;
  options.seed = g.seed;
  report.input_digest = digest("suite:" + suite + ":" + std::to_string(g.seed) + ":" +
                               std::to_string(g.samples));
  report.properties["suite"] = suite;
  report.properties["samples"] = g.samples;
  report.properties["seed"] = g.seed;
  for (const auto& r : run_paper_suite(options)) {
    report.check("criterion " + std::to_string(r.id) + ": " + r.title, pass_if(r.passed),
                 {{"worst", r.worst}, {"bound", r.bound}, {"detail", r.detail}});
    report.timings["criterion " + std::to_string(r.id)] = r.runtime_seconds;
  }
}

// ---------------------------------------------------------------------------

ordered_json report_json(const Report& r, const Globals& g) {
  ordered_json out;
  out["schema"] = 1;
  out["command"] = r.command;
  out["arguments"] = r.arguments;
  out["input_digest"] = r.input_digest;
  out["tolerance"] = r.tolerance;
  out["signature_convention"] = "(positive, negative) direction counts";
  out["notes"] = r.notes;
  out["checks"] = r.checks;
  out["properties"] = r.properties;
  out["passed"] = !r.failed;
  if (g.timings) out["timings"] = r.timings;
  return out;
}

void print_text(const Report& r, const Globals& g, std::ostream& out) {
  out << "liefol " << r.command << "  " << r.input_digest << "  tol " << r.tolerance << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  for (const auto& c : r.checks) {
    std::string status = c["status"].get<std::string>();
    if (status == "not-applicable") status = "n/a";
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    status.resize(5, ' ');
    out << status << c["name"].get<std::string>() << "  " << c["witness"].dump() << "\n";
  }
  for (const auto& [key, value] : r.properties.items()) out << key << ": " << value.dump() << "\n";
  if (g.timings) {
    for (const auto& [key, value] : r.timings.items()) out << "time " << key << ": " << value.dump() << " s\n";
  }
  out << (r.failed ? "result: FAIL" : "result: PASS") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Left-invariant foliations of codimension two on Lie groups", "liefol"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "Numerical tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", g.samples, "Random sample count")->capture_default_str();
  app.add_flag("--timings", g.timings, "Include wall-clock timings in the report");

  std::string file;
  std::string preset_name;
  std::string vertical;
  std::string factors;
  std::string plane;
  bool leaf = false;

  auto* check = app.add_subcommand("check", "Validate brackets and report Killing form and signature");
  check->add_option("file", file, "Algebra document ('-' for stdin)");
  check->add_option("--preset", preset_name, "Use a catalog preset instead of a file");

  auto* foliation = app.add_subcommand("foliation", "Classify the foliation of a vertical subalgebra");
  foliation->add_option("file", file, "Algebra document ('-' for stdin)");
  foliation->add_option("--preset", preset_name, "Use a catalog preset instead of a file");
  foliation->add_option("--vertical", vertical, "Vertical coordinate indices, e.g. 0,1,2");
  foliation->add_option("--factors", factors, "Vertical ideal factors, e.g. 0,1,2;3,4,5");

  auto* curvature = app.add_subcommand("curvature", "Sectional curvatures of a Riemannian metric");
  curvature->add_option("file", file, "Algebra document ('-' for stdin)");
  curvature->add_option("--preset", preset_name, "Use a catalog preset instead of a file");
  curvature->add_option("--plane", plane, "Frame indices i,j of a single plane");
  curvature->add_flag("--leaf", leaf, "Leaf-space curvature through O'Neill's formula");
  curvature->add_option("--vertical", vertical, "Vertical coordinate indices for --leaf");

  auto* berger = app.add_subcommand("berger", "Berger-type extension of su(2)");
  auto params = catalog::default_berger_params();
  std::string emit;
  std::size_t sweep = 0;
  berger->add_option("--lambda", params.lambda)->capture_default_str();
  berger->add_option("--x3", params.x3)->capture_default_str();
  berger->add_option("--x4", params.x4)->capture_default_str();
  berger->add_option("--x5", params.x5)->capture_default_str();
  berger->add_option("--x6", params.x6)->capture_default_str();
  berger->add_option("--z3", params.z3)->capture_default_str();
  berger->add_option("--z4", params.z4)->capture_default_str();
  berger->add_option("--rho", params.rho)->capture_default_str();
  berger->add_option("--emit", emit, "Write the algebra document to this path");
  berger->add_option("--sweep", sweep, "Check N random parameter draws instead");

  auto* preset = app.add_subcommand("preset", "Print a catalog algebra as a document");
  std::string name;
  preset->add_option("name", name, "Preset name, or intro-table; omit to list");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "Suite name")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  if (preset->parsed()) {
    try {
      if (name.empty()) {
        for (const auto& n : catalog::preset_names()) out << n << "\n";
        out << "intro-table\n";
      } else if (name == "intro-table") {
        ordered_json docs = ordered_json::array();
        for (const auto& c : catalog::intro_table_cases()) {
          auto doc = ordered_json::parse(emit_document(to_document(c)));
          docs.push_back({{"name", c.name}, {"document", std::move(doc)}});
        }
        out << docs.dump(2) << "\n";
      } else {
        out << emit_document(to_document(catalog::preset(name)));
      }
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }
    return kExitPass;
  }

  Report report;
  report.arguments = args;
  report.tolerance = g.tol;
  const auto start = Clock::now();
  try {
    if (check->parsed()) {
      report.command = "check";
      run_check(load_input(file, preset_name, report), g, report);
    } else if (foliation->parsed()) {
      report.command = "foliation";
      run_foliation(load_input(file, preset_name, report), vertical, factors, g, report);
    } else if (curvature->parsed()) {
      report.command = "curvature";
      run_curvature(load_input(file, preset_name, report), plane, leaf, vertical, g, report);
    } else if (berger->parsed()) {
      report.command = "berger";
      if (sweep > 0) {
        run_berger_sweep(sweep, g, report);
      } else {
        run_berger_single(params, emit, g, report);
      }
    } else if (verify->parsed()) {
      report.command = "verify";
      run_verify(suite, g, report);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DegenerateMetricError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnsupportedSignatureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidInvolutionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  report.timings["total"] = std::chrono::duration<double>(Clock::now() - start).count();

  if (g.format == "text") {
    print_text(report, g, out);
  } else {
    out << report_json(report, g).dump(2) << "\n";
  }
  return report.failed ? kExitFail : kExitPass;
}

}  // namespace liefol::cli
