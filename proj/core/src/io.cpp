#include "mdprod/io.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "mdprod/error.hpp"

namespace mdprod {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(Errc code, std::size_t line, const std::string& reason) {
  throw Error(code, "line " + std::to_string(line) + ": " + reason, line);
}

std::uint64_t parse_id(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(Errc::parse_error, line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = std::to_string(v);
  return out;
}

EdgeListDocument parse_edge_list_document(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  std::vector<std::string> labels;
  std::size_t line_no = 0;

  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        fail(Errc::parse_error, line_no, "expected header 'n <count>'");
      }
      const auto count = parse_id(tokens[1], line_no);
      if (count == 0) fail(Errc::parse_error, line_no, "vertex count must be at least 1");
      if (count > (std::uint64_t{1} << 32)) fail(Errc::parse_error, line_no, "vertex count too large");
      n = static_cast<std::size_t>(count);
      labels = default_labels(*n);
      continue;
    }
    if (tokens[0] == "name") {
      if (tokens.size() != 3) fail(Errc::parse_error, line_no, "expected 'name <id> <label>'");
      const auto id = parse_id(tokens[1], line_no);
      if (id >= *n) {
        fail(Errc::vertex_out_of_range, line_no, "vertex " + std::to_string(id) + " >= n");
      }
      labels[id] = std::string(tokens[2]);
      continue;
    }
    if (tokens[0] == "n") fail(Errc::parse_error, line_no, "duplicate header");
    if (tokens.size() != 2) fail(Errc::parse_error, line_no, "expected '<tail> <head>'");
    const auto tail = parse_id(tokens[0], line_no);
    const auto head = parse_id(tokens[1], line_no);
    if (tail >= *n || head >= *n) {
      fail(Errc::vertex_out_of_range, line_no,
           "arc (" + std::to_string(tail) + ", " + std::to_string(head) + ") has an endpoint >= n");
    }
    if (tail == head) fail(Errc::loop_arc, line_no, "loop arc at vertex " + std::to_string(tail));
    Arc arc{static_cast<Vertex>(tail), static_cast<Vertex>(head)};
    if (!seen.insert(arc).second) {
      fail(Errc::parallel_arc, line_no,
           "arc (" + std::to_string(tail) + ", " + std::to_string(head) + ") repeated");
    }
    arcs.push_back(arc);
  }
  if (!n) fail(Errc::parse_error, line_no == 0 ? 1 : line_no, "missing header 'n <count>'");
  return EdgeListDocument{Digraph::from_arcs(*n, arcs), std::move(labels)};
}

std::string serialize_edge_list(const Digraph& d, std::span<const std::string> labels) {
  std::ostringstream out;
  out << "n " << d.order() << '\n';
  for (std::size_t v = 0; v < labels.size() && v < d.order(); ++v) {
    if (labels[v] != std::to_string(v)) out << "name " << v << ' ' << labels[v] << '\n';
  }
  for (const auto& [tail, head] : d.arcs()) out << tail << ' ' << head << '\n';
  return out.str();
}

GeneratedDigraph generate_strong_digraph(const GeneratorConfig& cfg) {
  if (cfg.n == 0) throw Error(Errc::invalid_config, "generator needs n >= 1");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) {
    throw Error(Errc::invalid_config, "arc probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(cfg.seed);
  const auto n = static_cast<Vertex>(cfg.n);
  const std::size_t budget = std::max<std::size_t>(cfg.max_retries, 1);

  std::vector<Arc> arcs;
  for (std::size_t attempt = 1; attempt <= budget; ++attempt) {
    arcs.clear();
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = cfg.bidirected ? a + 1 : 0; b < n; ++b) {
        if (a == b || uniform01(rng) >= cfg.p) continue;
        arcs.emplace_back(a, b);
        if (cfg.bidirected) arcs.emplace_back(b, a);
      }
    }
    auto d = Digraph::from_arcs(cfg.n, arcs);
    if (is_strong(d)) return GeneratedDigraph{std::move(d), attempt, false};
  }

  std::set<Arc> all(arcs.begin(), arcs.end());
  for (Vertex v = 0; v < n; ++v) {
    const Vertex next = (v + 1) % n;
    if (next == v) continue;
    all.emplace(v, next);
    if (cfg.bidirected) all.emplace(next, v);
  }
  std::vector<Arc> merged(all.begin(), all.end());
  return GeneratedDigraph{Digraph::from_arcs(cfg.n, merged), budget, true};
}

const VertexSet& select_set(const BoundaryProfile& profile, std::string_view name) {
  if (name == "boundary") return profile.boundary;
  if (name == "eccentricity") return profile.eccentricity_set;
  if (name == "periphery") return profile.periphery;
  if (name == "contour") return profile.contour;
  throw Error(Errc::unknown_set_name,
              "unknown set '" + std::string(name) +
                  "' (expected boundary, eccentricity, periphery or contour)");
}

std::string export_dot(const Digraph& d, std::span<const std::string> labels,
                       const VertexSet* highlight) {
  std::ostringstream out;
  out << "digraph D {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < d.order(); ++v) {
    const std::string label = v < labels.size() ? labels[v] : std::to_string(v);
    out << "  " << v << " [label=\"";
    for (char c : label) {
      if (c == '"' || c == '\\') out << '\\';
      out << c;
    }
    out << '"';
    if (highlight && highlight->contains(v)) out << ", style=filled, fillcolor=\"#f4a261\"";
    out << "];\n";
  }
  for (const auto& [tail, head] : d.arcs()) out << "  " << tail << " -> " << head << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mdprod
