#ifndef MDPROD_CLI_COMMANDS_HPP
#define MDPROD_CLI_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mdprod/boundary_sets.hpp"
#include "mdprod/error.hpp"
#include "mdprod/io.hpp"
#include "mdprod/strong_product.hpp"
#include "mdprod/verify.hpp"

namespace mdprod::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  exit_ok = 0,
  exit_violation = 1,  // verify found a mismatch, or product --mode=both disagreed
  exit_parse_error = 2,
  exit_not_strong = 3,
  exit_size_overflow = 4,
  exit_invalid_usage = 5,
};

int exit_code_for(const Error& e);

enum class ProductMode { formula, oracle, both };

struct AnalyzeOptions {
  std::string input;
  std::optional<std::string> out;
  bool pretty = false;
  Neighborhood neighborhood = Neighborhood::open;
};

struct ProductOptions {
  std::string first;
  std::string second;
  std::optional<std::string> out;
  bool pretty = false;
  Neighborhood neighborhood = Neighborhood::open;
  ProductMode mode = ProductMode::formula;
  std::size_t budget = default_vertex_budget;
};

struct GenOptions {
  GeneratorConfig config;
  std::optional<std::string> out;
};

struct ExportOptions {
  std::vector<std::string> inputs;  // one digraph, or two factors of a product
  std::optional<std::string> highlight;
  std::optional<std::string> out;
  std::size_t budget = default_vertex_budget;
};

struct VerifyOptions {
  VerifyConfig config;
  std::optional<std::string> out;
};

// Each command writes its result to `out` (or the --out file) and
// diagnostics to `err`, returning the process exit code.
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_product(const ProductOptions& opts, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_export(const ExportOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdprod::cli

#endif  // MDPROD_CLI_COMMANDS_HPP
