#ifndef MDPROD_VERIFY_HPP
#define MDPROD_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mdprod/digraph.hpp"
#include "mdprod/strong_product.hpp"

namespace mdprod {

using SetFormula = std::function<VertexSet(const FactorPair&)>;

/// Replacement formulas, used to check that the harness catches a planted fault.
struct FormulaOverrides {
  SetFormula boundary;
  SetFormula periphery;
  SetFormula eccentric;
  SetFormula contour;
};

struct VerifyConfig {
  std::size_t trials = 200;
  std::size_t n_min = 2;
  std::size_t n_max = 7;
  /// Arc probability; when unset, trials cycle through 0.2, 0.4, 0.7.
  std::optional<double> p;
  std::uint64_t seed = 7;
  std::size_t max_retries = 100;
  bool bidirected = false;
  FormulaOverrides overrides;
};

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct Counterexample {
  std::string check;
  std::size_t trial = 0;
  Digraph d1;
  Digraph d2;
};

struct VerifySummary {
  std::size_t trials = 0;
  std::vector<CheckTally> checks;
  /// First failing check, reduced by greedy arc deletion.
  std::optional<Counterexample> counterexample;

  bool ok() const;
  const CheckTally* find(const std::string& name) const;
};

/// Names of the per-trial checks, in report order.
const std::vector<std::string>& verification_checks();

/// Runs one named check on a factor pair; true when it holds.
bool run_check(const std::string& name, const Digraph& d1, const Digraph& d2,
               const FormulaOverrides& overrides = {});

/// Deterministic per-trial seed derived from the master seed.
std::uint64_t trial_seed(std::uint64_t master, std::size_t trial);

/// The factor pair drawn for a given trial.
std::pair<Digraph, Digraph> trial_factors(const VerifyConfig& cfg, std::size_t trial);

/// Throws Error{invalid_config} for trials = 0 or an empty size range.
VerifySummary run_verification(const VerifyConfig& cfg);

/// Greedily deletes arcs of either factor while both stay strong and `name`
/// still fails.
std::pair<Digraph, Digraph> minimize_counterexample(const std::string& name, Digraph d1,
                                                    Digraph d2,
                                                    const FormulaOverrides& overrides = {});

}  // namespace mdprod

#endif  // MDPROD_VERIFY_HPP
