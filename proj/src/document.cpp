#include "liefol/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <tuple>

namespace liefol {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

std::size_t read_index(const json& value, const std::string& field, std::size_t dim) {
  if (!value.is_number_integer()) throw ParseError(field, "expected a non-negative integer");
  const auto v = value.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= dim) {
    throw ParseError(field, "index " + std::to_string(v) + " out of range for dimension " +
                                std::to_string(dim));
  }
  return static_cast<std::size_t>(v);
}

double read_number(const json& value, const std::string& field) {
  if (!value.is_number()) throw ParseError(field, "expected a number");
  return value.get<double>();
}

}  // namespace

LieAlgebra AlgebraDocument::algebra() const {
  return LieAlgebra::from_entries(dimension, brackets, basis_names);
}

MetricTensor AlgebraDocument::metric_tensor() const {
  if (metric) return MetricTensor(*metric);
  return MetricTensor::identity(dimension);
}

AlgebraDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)), "malformed JSON");
  }
  if (!root.is_object()) throw ParseError("document", "expected a JSON object");

  static const std::set<std::string> known = {"dimension", "basis_names", "brackets", "metric",
                                              "vertical"};
  for (const auto& [key, value] : root.items()) {
    if (!known.count(key)) throw ParseError(key, "unknown field");
  }

  AlgebraDocument doc;
  if (!root.contains("dimension")) throw ParseError("dimension", "missing required field");
  const auto& dim = root["dimension"];
  if (!dim.is_number_integer() || dim.get<long long>() <= 0) {
    throw ParseError("dimension", "expected a positive integer");
  }
  doc.dimension = dim.get<std::size_t>();
  const auto n = doc.dimension;

  if (root.contains("basis_names")) {
    const auto& names = root["basis_names"];
    if (!names.is_array() || names.size() != n) {
      throw ParseError("basis_names", "expected an array of " + std::to_string(n) + " strings");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!names[a].is_string()) {
        throw ParseError("basis_names[" + std::to_string(a) + "]", "expected a string");
      }
      doc.basis_names.push_back(names[a].get<std::string>());
    }
  }

  if (root.contains("brackets")) {
    const auto& brackets = root["brackets"];
    if (!brackets.is_array()) throw ParseError("brackets", "expected an array");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < brackets.size(); ++e) {
      const std::string field = "brackets[" + std::to_string(e) + "]";
      const auto& entry = brackets[e];
      if (!entry.is_object()) throw ParseError(field, "expected an object");
      for (const auto& [key, value] : entry.items()) {
        if (key != "i" && key != "j" && key != "k" && key != "value") {
          throw ParseError(field + "." + key, "unknown field");
        }
      }
      for (const char* key : {"i", "j", "k", "value"}) {
        if (!entry.contains(key)) throw ParseError(field + "." + key, "missing required field");
      }
      BracketEntry b;
      b.i = read_index(entry["i"], field + ".i", n);
      b.j = read_index(entry["j"], field + ".j", n);
      b.k = read_index(entry["k"], field + ".k", n);
      b.value = read_number(entry["value"], field + ".value");
      if (b.i >= b.j) throw ParseError(field, "bracket indices must satisfy i < j");
      if (!seen.insert({b.i, b.j, b.k}).second) {
        throw ParseError(field, "duplicate bracket entry");
      }
      doc.brackets.push_back(b);
    }
  }

  if (root.contains("metric")) {
    const auto& m = root["metric"];
    if (!m.is_array() || m.size() != n) {
      throw ParseError("metric", "expected " + std::to_string(n) + " rows");
    }
    Eigen::MatrixXd g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
      const std::string row = "metric[" + std::to_string(r) + "]";
      if (!m[r].is_array() || m[r].size() != n) {
        throw ParseError(row, "expected " + std::to_string(n) + " entries");
      }
      for (std::size_t c = 0; c < n; ++c) {
        g(r, c) = read_number(m[r][c], row + "[" + std::to_string(c) + "]");
      }
    }
    try {
      MetricTensor check(g);
    } catch (const InputError& e) {
      throw ParseError("metric", e.what());
    }
    doc.metric = g;
  }

  if (root.contains("vertical")) {
    const auto& v = root["vertical"];
    if (!v.is_array()) throw ParseError("vertical", "expected an array of indices");
    std::vector<std::size_t> indices;
    for (std::size_t a = 0; a < v.size(); ++a) {
      indices.push_back(read_index(v[a], "vertical[" + std::to_string(a) + "]", n));
    }
    if (std::set<std::size_t>(indices.begin(), indices.end()).size() != indices.size()) {
      throw ParseError("vertical", "indices must be distinct");
    }
    doc.vertical = std::move(indices);
  }
  return doc;
}

std::string emit_document(const AlgebraDocument& doc) {
  ordered_json root;
  root["dimension"] = doc.dimension;
  if (!doc.basis_names.empty()) root["basis_names"] = doc.basis_names;
  ordered_json brackets = ordered_json::array();
  for (const auto& b : doc.brackets) {
    brackets.push_back({{"i", b.i}, {"j", b.j}, {"k", b.k}, {"value", b.value}});
  }
  root["brackets"] = std::move(brackets);
  if (doc.metric) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < doc.metric->rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index c = 0; c < doc.metric->cols(); ++c) row.push_back((*doc.metric)(r, c));
      rows.push_back(std::move(row));
    }
    root["metric"] = std::move(rows);
  }
  if (doc.vertical) root["vertical"] = *doc.vertical;
  return root.dump(2) + "\n";
}

AlgebraDocument to_document(const LieAlgebra& algebra, const MetricTensor& metric,
                            std::optional<std::vector<std::size_t>> vertical) {
  AlgebraDocument doc;
  doc.dimension = algebra.dim();
  doc.basis_names = algebra.basis_names();
  doc.brackets = algebra.entries();
  const auto n = static_cast<Eigen::Index>(algebra.dim());
  if (!(metric.matrix().array() == Eigen::MatrixXd::Identity(n, n).array()).all()) {
    doc.metric = metric.matrix();
  }
  doc.vertical = std::move(vertical);
  return doc;
}

AlgebraDocument to_document(const catalog::Preset& preset) {
  std::optional<std::vector<std::size_t>> vertical;
  if (!preset.vertical.empty()) vertical = preset.vertical;
  return to_document(preset.algebra, preset.metric, vertical);
}

}  // namespace liefol
