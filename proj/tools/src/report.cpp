#include "mdprod_cli/report.hpp"

#include <sstream>

namespace mdprod::cli {

namespace {

nlohmann::ordered_json members(const VertexSet& s, const std::vector<std::string>& labels) {
  auto arr = nlohmann::ordered_json::array();
  for (Vertex v : s) arr.push_back(labels[v]);
  return arr;
}

nlohmann::ordered_json sets_json(const BoundaryProfile& b, const std::vector<std::string>& labels) {
  nlohmann::ordered_json j;
  j["boundary"] = members(b.boundary, labels);
  j["eccentricity"] = members(b.eccentricity_set, labels);
  j["periphery"] = members(b.periphery, labels);
  j["contour"] = members(b.contour, labels);
  return j;
}

std::string joined(const VertexSet& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ", ";
    out += labels[v];
    first = false;
  }
  return out + "}";
}

void pretty_sets(std::ostringstream& out, const BoundaryProfile& b,
                 const std::vector<std::string>& labels, const std::string& indent) {
  out << indent << "boundary      " << joined(b.boundary, labels) << '\n';
  out << indent << "eccentricity  " << joined(b.eccentricity_set, labels) << '\n';
  out << indent << "periphery     " << joined(b.periphery, labels) << '\n';
  out << indent << "contour       " << joined(b.contour, labels) << '\n';
}

}  // namespace

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["digraph"] = {{"n", r.order}, {"arcs", r.arc_count}, {"strong", r.strong}};
  j["vertices"] = r.labels;
  j["metric"] = {{"eccentricities", r.eccentricities},
                 {"radius", r.radius},
                 {"diameter", r.diameter}};
  j["sets"] = sets_json(r.sets, r.labels);
  if (r.provenance) {
    j["provenance"] = {{"factors", {r.provenance->first, r.provenance->second}},
                       {"mode", r.provenance->mode},
                       {"sets_from", r.provenance->source}};
  }
  if (r.oracle_sets) j["oracle_sets"] = sets_json(*r.oracle_sets, r.labels);
  if (r.differences) j["differences"] = sets_json(*r.differences, r.labels);
  return j;
}

std::string render(const AnalysisReport& r, bool pretty) {
  if (!pretty) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "vertices " << r.order << ", arcs " << r.arc_count << ", "
      << (r.strong ? "strong" : "not strong") << '\n';
  if (r.provenance) {
    out << "product of " << r.provenance->first << " and " << r.provenance->second << " (mode "
        << r.provenance->mode << ", sets from " << r.provenance->source << ")\n";
  }
  out << "radius " << r.radius << ", diameter " << r.diameter << '\n';
  out << "\n  vertex  ecc\n";
  for (std::size_t v = 0; v < r.order; ++v) {
    out << "  " << r.labels[v];
    for (std::size_t pad = r.labels[v].size(); pad < 8; ++pad) out << ' ';
    out << r.eccentricities[v] << '\n';
  }
  out << '\n';
  pretty_sets(out, r.sets, r.labels, "");
  if (r.oracle_sets) {
    out << "\noracle:\n";
    pretty_sets(out, *r.oracle_sets, r.labels, "  ");
  }
  if (r.differences) {
    out << "\nformula vs oracle differences:\n";
    pretty_sets(out, *r.differences, r.labels, "  ");
  }
  return out.str();
}

}  // namespace mdprod::cli
