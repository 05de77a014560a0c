#ifndef MDPROD_CLI_REPORT_HPP
#define MDPROD_CLI_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdprod/boundary_sets.hpp"
#include "mdprod/metric.hpp"

namespace mdprod::cli {

struct ProductProvenance {
  std::string first;
  std::string second;
  std::string mode;
  /// Which computation produced each set in `sets`.
  std::string source;
};

/// Result of `analyze` or `product`. Serializes with a fixed key order and
/// sorted set members so reruns are byte-identical.
struct AnalysisReport {
  std::size_t order = 0;
  std::size_t arc_count = 0;
  bool strong = true;
  std::vector<std::string> labels;
  std::vector<Hops> eccentricities;
  Hops radius = 0;
  Hops diameter = 0;
  BoundaryProfile sets;
  std::optional<ProductProvenance> provenance;
  /// --mode=both: the oracle's sets and the per-set symmetric differences.
  std::optional<BoundaryProfile> oracle_sets;
  std::optional<BoundaryProfile> differences;
};

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string render(const AnalysisReport& report, bool pretty);

}  // namespace mdprod::cli

#endif  // MDPROD_CLI_REPORT_HPP
