#include "mdprod/boundary_sets.hpp"

#include <algorithm>
#include <string>

#include "mdprod/error.hpp"

namespace mdprod {

namespace {

VertexSet scanned(const Digraph& d, Vertex v, Neighborhood mode) {
  return mode == Neighborhood::open ? neighbors(d, v) : closed_neighbors(d, v);
}

void check_same_order(const MetricProfile& p, const Digraph& d) {
  if (p.order() != d.order()) {
    throw Error(Errc::vertex_out_of_range, "metric profile of order " + std::to_string(p.order()) +
                                               " does not describe a digraph of order " +
                                               std::to_string(d.order()));
  }
}

}  // namespace

bool is_boundary_vertex_of(const MetricProfile& p, const Digraph& d, Vertex v, Vertex u,
                           Neighborhood mode) {
  check_same_order(p, d);
  const Hops reach = p.md(u, v);
  auto row = p.md_row(u);
  return std::ranges::all_of(scanned(d, v, mode), [&](Vertex w) { return row[w] <= reach; });
}

VertexSet boundary_set(const MetricProfile& p, const Digraph& d, Neighborhood mode) {
  check_same_order(p, d);
  const auto n = static_cast<Vertex>(d.order());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet around = scanned(d, v, mode);
    for (Vertex u = 0; u < n; ++u) {
      auto row = p.md_row(u);
      if (std::ranges::all_of(around, [&](Vertex w) { return row[w] <= row[v]; })) {
        out.push_back(v);
        break;
      }
    }
  }
  return VertexSet(std::move(out));
}

VertexSet eccentric_vertices_of(const MetricProfile& p, Vertex u) {
  const Hops e = p.ecc(u);
  auto row = p.md_row(u);
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < row.size(); ++w) {
    if (row[w] == e) out.push_back(static_cast<Vertex>(w));
  }
  return VertexSet(std::move(out));
}

VertexSet eccentric_set(const MetricProfile& p) {
  const std::size_t n = p.order();
  std::vector<bool> hit(n, false);
  for (std::size_t u = 0; u < n; ++u) {
    const Hops e = p.ecc(static_cast<Vertex>(u));
    auto row = p.md_row(static_cast<Vertex>(u));
    for (std::size_t w = 0; w < n; ++w) {
      if (row[w] == e) hit[w] = true;
    }
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (hit[v]) out.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(out));
}

VertexSet periphery_set(const MetricProfile& p) {
  std::vector<Vertex> out;
  auto ecc = p.eccentricities();
  for (std::size_t v = 0; v < ecc.size(); ++v) {
    if (ecc[v] == p.diameter()) out.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(out));
}

VertexSet contour_set(const MetricProfile& p, const Digraph& d, Neighborhood mode) {
  check_same_order(p, d);
  auto ecc = p.eccentricities();
  std::vector<Vertex> out;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (std::ranges::all_of(scanned(d, v, mode), [&](Vertex w) { return ecc[w] <= ecc[v]; })) {
      out.push_back(v);
    }
  }
  return VertexSet(std::move(out));
}

BoundaryProfile boundary_profile(const MetricProfile& p, const Digraph& d, Neighborhood mode) {
  return BoundaryProfile{
      .boundary = boundary_set(p, d, mode),
      .eccentricity_set = eccentric_set(p),
      .periphery = periphery_set(p),
      .contour = contour_set(p, d, mode),
  };
}

}  // namespace mdprod
