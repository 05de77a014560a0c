#include "mdprod_cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "mdprod/error.hpp"
#include "mdprod/io.hpp"
#include "mdprod_cli/report.hpp"

namespace mdprod::cli {

namespace {

EdgeListDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_edge_list_document(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.line());
  }
}

// Writes to --out when given, otherwise to `out`.
void emit(const std::optional<std::string>& path, std::ostream& out, const std::string& text) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw Error(Errc::invalid_config, "cannot write '" + *path + "'");
  file << text;
}

std::vector<std::string> pair_labels(const std::vector<std::string>& first,
                                     const std::vector<std::string>& second) {
  std::vector<std::string> out;
  out.reserve(first.size() * second.size());
  for (const auto& a : first) {
    for (const auto& b : second) out.push_back("(" + a + "," + b + ")");
  }
  return out;
}

std::string mode_name(ProductMode mode) {
  switch (mode) {
    case ProductMode::formula: return "formula";
    case ProductMode::oracle: return "oracle";
    case ProductMode::both: return "both";
  }
  return "formula";
}

// Runs `body`, mapping library errors onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

bool any_nonempty(const BoundaryProfile& b) {
  return !b.boundary.empty() || !b.eccentricity_set.empty() || !b.periphery.empty() ||
         !b.contour.empty();
}

BoundaryProfile difference(const BoundaryProfile& a, const BoundaryProfile& b) {
  return BoundaryProfile{
      .boundary = set_symmetric_difference(a.boundary, b.boundary),
      .eccentricity_set = set_symmetric_difference(a.eccentricity_set, b.eccentricity_set),
      .periphery = set_symmetric_difference(a.periphery, b.periphery),
      .contour = set_symmetric_difference(a.contour, b.contour),
  };
}

}  // namespace

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::loop_arc:
    case Errc::parallel_arc:
    case Errc::vertex_out_of_range:
      return exit_parse_error;
    case Errc::not_strong: return exit_not_strong;
    case Errc::size_overflow: return exit_size_overflow;
    case Errc::invalid_config:
    case Errc::unknown_set_name:
      return exit_invalid_usage;
  }
  return exit_invalid_usage;
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const EdgeListDocument doc = load(opts.input);
    const MetricProfile profile = metric_profile(doc.graph);
    AnalysisReport report;
    report.order = doc.graph.order();
    report.arc_count = doc.graph.arc_count();
    report.labels = doc.labels;
    report.eccentricities.assign(profile.eccentricities().begin(), profile.eccentricities().end());
    report.radius = profile.radius();
    report.diameter = profile.diameter();
    report.sets = boundary_profile(profile, doc.graph, opts.neighborhood);
    emit(opts.out, out, render(report, opts.pretty));
    return int{exit_ok};
  });
}

int cmd_product(const ProductOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const EdgeListDocument first = load(opts.first);
    const EdgeListDocument second = load(opts.second);
    const FactorPair factors(first.graph, second.graph);

    AnalysisReport report;
    report.order = factors.label().size();
    report.labels = pair_labels(first.labels, second.labels);
    report.provenance = ProductProvenance{opts.first, opts.second, mode_name(opts.mode),
                                          opts.mode == ProductMode::oracle ? "oracle" : "formula"};

    if (opts.mode == ProductMode::oracle) {
      const StrongProduct product = strong_product(first.graph, second.graph, opts.budget);
      const MetricProfile profile = metric_profile(product.digraph);
      report.arc_count = product.digraph.arc_count();
      report.eccentricities.assign(profile.eccentricities().begin(),
                                   profile.eccentricities().end());
      report.radius = profile.radius();
      report.diameter = profile.diameter();
      report.sets = boundary_profile(profile, product.digraph, opts.neighborhood);
      emit(opts.out, out, render(report, opts.pretty));
      return int{exit_ok};
    }

    const std::size_t m1 = first.graph.arc_count();
    const std::size_t m2 = second.graph.arc_count();
    report.arc_count = m1 * second.graph.order() + first.graph.order() * m2 + m1 * m2;
    ProductEccentricities ecc = product_eccentricities(factors);
    report.eccentricities = std::move(ecc.ecc);
    report.radius = ecc.radius;
    report.diameter = ecc.diameter;
    report.sets = product_profile_via_factors(factors, opts.neighborhood);

    int code = exit_ok;
    if (opts.mode == ProductMode::both) {
      report.oracle_sets = product_profile_direct(factors, opts.neighborhood, opts.budget);
      report.differences = difference(report.sets, *report.oracle_sets);
      if (any_nonempty(*report.differences)) {
        err << "formula and oracle sets differ\n";
        code = exit_violation;
      }
    }
    emit(opts.out, out, render(report, opts.pretty));
    return code;
  });
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GeneratedDigraph g = generate_strong_digraph(opts.config);
    std::ostringstream text;
    text << "# gen n=" << opts.config.n << " p=" << opts.config.p << " seed=" << opts.config.seed
         << (opts.config.bidirected ? " bidirected" : "") << " attempts=" << g.attempts
         << " augmented=" << (g.augmented ? "yes" : "no") << '\n';
    text << serialize_edge_list(g.digraph);
    emit(opts.out, out, text.str());
    return int{exit_ok};
  });
}

int cmd_export(const ExportOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.inputs.empty() || opts.inputs.size() > 2) {
      throw Error(Errc::invalid_config, "export takes one digraph or two product factors");
    }
    // Resolve the set name before doing any work so typos fail fast.
    if (opts.highlight) select_set(BoundaryProfile{}, *opts.highlight);

    const EdgeListDocument first = load(opts.inputs[0]);
    std::optional<Digraph> graph;
    std::vector<std::string> labels;
    if (opts.inputs.size() == 1) {
      graph = first.graph;
      labels = first.labels;
    } else {
      const EdgeListDocument second = load(opts.inputs[1]);
      graph = strong_product(first.graph, second.graph, opts.budget).digraph;
      labels = pair_labels(first.labels, second.labels);
    }
    std::optional<BoundaryProfile> profile;
    const VertexSet* highlight = nullptr;
    if (opts.highlight) {
      profile = boundary_profile(metric_profile(*graph), *graph);
      highlight = &select_set(*profile, *opts.highlight);
    }
    emit(opts.out, out, export_dot(*graph, labels, highlight));
    return int{exit_ok};
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const VerifyConfig& cfg = opts.config;
    const VerifySummary summary = run_verification(cfg);
    std::ostringstream text;
    text << "verify: " << summary.trials << " trials, seed " << cfg.seed << ", n in ["
         << cfg.n_min << ", " << cfg.n_max << "]";
    if (cfg.p) {
      text << ", p " << *cfg.p;
    } else {
      text << ", p cycling 0.2/0.4/0.7";
    }
    text << (cfg.bidirected ? ", bidirected" : "") << '\n';
    for (const auto& t : summary.checks) {
      text << "  " << t.name;
      for (std::size_t pad = t.name.size(); pad < 32; ++pad) text << ' ';
      text << t.passed << '/' << (t.passed + t.failed) << (t.failed == 0 ? " pass" : " FAIL")
           << '\n';
    }
    text << "result: " << (summary.ok() ? "PASS" : "FAIL") << '\n';
    if (summary.counterexample) {
      const auto& c = *summary.counterexample;
      text << "\ncounterexample for " << c.check << " (trial " << c.trial << ", minimized)\n";
      text << "# first factor\n" << serialize_edge_list(c.d1);
      text << "# second factor\n" << serialize_edge_list(c.d2);
    }
    emit(opts.out, out, text.str());
    return summary.ok() ? int{exit_ok} : int{exit_violation};
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary-type sets of strong digraphs and their strong products"};
  app.require_subcommand(1);

  const std::map<std::string, Neighborhood> neighborhoods{{"open", Neighborhood::open},
                                                         {"closed", Neighborhood::closed}};
  const std::map<std::string, ProductMode> modes{{"formula", ProductMode::formula},
                                                 {"oracle", ProductMode::oracle},
                                                 {"both", ProductMode::both}};

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Metric profile and boundary-type sets");
  analyze_cmd->add_option("input", analyze.input, "Edge-list file")->required();
  analyze_cmd->add_option("--out", analyze.out, "Write the report here");
  analyze_cmd->add_flag("--pretty", analyze.pretty, "Human-readable table");
  analyze_cmd->add_option("--neighborhood", analyze.neighborhood, "open or closed")
      ->transform(CLI::CheckedTransformer(neighborhoods, CLI::ignore_case));

  ProductOptions product;
  auto* product_cmd = app.add_subcommand("product", "Boundary-type sets of a strong product");
  product_cmd->add_option("first", product.first, "First factor")->required();
  product_cmd->add_option("second", product.second, "Second factor")->required();
  product_cmd->add_option("--mode", product.mode, "formula, oracle or both")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  product_cmd->add_option("--out", product.out, "Write the report here");
  product_cmd->add_flag("--pretty", product.pretty, "Human-readable table");
  product_cmd->add_option("--neighborhood", product.neighborhood, "open or closed")
      ->transform(CLI::CheckedTransformer(neighborhoods, CLI::ignore_case));
  product_cmd->add_option("--budget", product.budget, "Vertex limit for building the product");

  VerifyOptions verify;
  std::optional<double> verify_p;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized formula-versus-oracle checks");
  verify_cmd->add_option("--trials", verify.config.trials, "Number of factor pairs");
  verify_cmd->add_option("--n-min", verify.config.n_min, "Smallest factor order");
  verify_cmd->add_option("--n-max", verify.config.n_max, "Largest factor order");
  verify_cmd->add_option("--p", verify_p, "Arc probability (default cycles 0.2/0.4/0.7)");
  verify_cmd->add_option("--seed", verify.config.seed, "Master seed");
  verify_cmd->add_option("--max-retries", verify.config.max_retries, "Generator retry budget");
  verify_cmd->add_flag("--bidirected", verify.config.bidirected, "Draw bidirected factors");
  verify_cmd->add_option("--out", verify.out, "Write the summary here");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Random strong digraph as an edge list");
  gen_cmd->add_option("--n", gen.config.n, "Vertex count")->required();
  gen_cmd->add_option("--p", gen.config.p, "Arc probability");
  gen_cmd->add_option("--seed", gen.config.seed, "Seed");
  gen_cmd->add_option("--max-retries", gen.config.max_retries, "Resampling budget");
  gen_cmd->add_flag("--bidirected", gen.config.bidirected, "Sample unordered pairs");
  gen_cmd->add_option("--out", gen.out, "Write the edge list here");

  ExportOptions exp;
  auto* export_cmd = app.add_subcommand("export", "Graphviz export of a digraph or product");
  export_cmd->add_option("inputs", exp.inputs, "One digraph, or two factors")->required();
  export_cmd->add_option("--highlight", exp.highlight,
                         "boundary, eccentricity, periphery or contour");
  export_cmd->add_option("--out", exp.out, "Write the DOT text here");
  export_cmd->add_option("--budget", exp.budget, "Vertex limit for building the product");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{exit_ok} : int{exit_invalid_usage};
  }

  if (*analyze_cmd) return cmd_analyze(analyze, out, err);
  if (*product_cmd) return cmd_product(product, out, err);
  if (*verify_cmd) {
    verify.config.p = verify_p;
    return cmd_verify(verify, out, err);
  }
  if (*gen_cmd) return cmd_gen(gen, out, err);
  return cmd_export(exp, out, err);
}

}  // namespace mdprod::cli
