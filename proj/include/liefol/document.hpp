#pragma once

#include "liefol/catalog.hpp"
#include "liefol/errors.hpp"
#include "liefol/lie_core.hpp"
#include "liefol/semi_metric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liefol {

/// JSON description of an algebra:
///
///   {
///     "dimension": 3,
///     "basis_names": ["e1", "e2", "e3"],          (optional)
///     "brackets": [{"i": 0, "j": 1, "k": 2, "value": 2.0}, ...],
///     "metric": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], (optional, identity)
///     "vertical": [0, 1]                           (optional)
///   }
///
/// Indices are zero-based and every bracket entry has i < j.
struct AlgebraDocument {
  std::size_t dimension = 0;
  std::vector<std::string> basis_names;
  std::vector<BracketEntry> brackets;
  std::optional<Eigen::MatrixXd> metric;
  std::optional<std::vector<std::size_t>> vertical;

  LieAlgebra algebra() const;
  /// Identity when no metric was given.
  MetricTensor metric_tensor() const;
};

/// Parse failure; `where` names the JSON field or the line of a syntax error.
class ParseError : public InputError {
 public:
  ParseError(const std::string& where, const std::string& what)
      : InputError(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Throws ParseError on malformed JSON, unknown fields, out-of-range or
/// unordered indices, duplicate bracket entries, or an asymmetric metric.
AlgebraDocument parse_document(std::string_view text);

/// Pretty-printed JSON; parse_document(emit_document(d)) reproduces d.
std::string emit_document(const AlgebraDocument& document);

AlgebraDocument to_document(const LieAlgebra& algebra, const MetricTensor& metric,
                            std::optional<std::vector<std::size_t>> vertical = std::nullopt);
AlgebraDocument to_document(const catalog::Preset& preset);

}  // namespace liefol
