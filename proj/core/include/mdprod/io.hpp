#ifndef MDPROD_IO_HPP
#define MDPROD_IO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdprod/boundary_sets.hpp"
#include "mdprod/digraph.hpp"

namespace mdprod {

/// A parsed edge-list file. Text format, one statement per line:
///
///   n <count>              header, first statement
///   <tail> <head>          arc
///   name <id> <label>      display label for a vertex
///
/// '#' starts a comment; blank lines are ignored.
struct EdgeListDocument {
  Digraph graph;
  /// One display label per vertex; the decimal id unless a name line set it.
  std::vector<std::string> labels;
};

/// Throws Error with `line()` set: parse_error for malformed text, or
/// loop_arc / parallel_arc / vertex_out_of_range for bad arcs.
EdgeListDocument parse_edge_list_document(std::string_view text);
inline Digraph parse_edge_list(std::string_view text) {
  return parse_edge_list_document(text).graph;
}

std::vector<std::string> default_labels(std::size_t n);

/// Inverse of parse_edge_list_document. Name lines are written only for
/// labels that differ from the default.
std::string serialize_edge_list(const Digraph& d, std::span<const std::string> labels = {});

struct GeneratorConfig {
  std::size_t n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t max_retries = 100;
  /// Sample unordered pairs and add both arcs, giving an undirected-style digraph.
  bool bidirected = false;
};

struct GeneratedDigraph {
  Digraph digraph;
  std::size_t attempts = 0;
  /// True when the retry budget ran out and the cycle 0->1->...->n-1->0 was
  /// added to the last sample.
  bool augmented = false;
};

/// Throws Error{invalid_config} for n = 0 or p outside [0, 1].
GeneratedDigraph generate_strong_digraph(const GeneratorConfig& cfg);

/// Set name -> member of `profile`: "boundary", "eccentricity", "periphery",
/// "contour". Throws Error{unknown_set_name}.
const VertexSet& select_set(const BoundaryProfile& profile, std::string_view name);

/// Graphviz digraph text. Members of `highlight` are drawn filled.
std::string export_dot(const Digraph& d, std::span<const std::string> labels = {},
                       const VertexSet* highlight = nullptr);

}  // namespace mdprod

#endif  // MDPROD_IO_HPP
