#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace liefol {

struct SuiteOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::size_t reframings = 50;
  std::size_t frame_changes = 20;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Largest observed deviation (or count, for counting criteria) and its bound.
  double worst = 0.0;
  double bound = 0.0;
  std::string detail;
  /// Wall-clock time spent on the criterion; kept out of `detail` so that
  /// everything else is reproducible.
  double runtime_seconds = 0.0;
};

/// Runs the ten instance-verification criteria over the catalog and a seeded
/// sample of the Berger family. Results are in criterion order and depend
/// only on the options.
std::vector<CriterionResult> run_paper_suite(const SuiteOptions& options = {});

}  // namespace liefol
