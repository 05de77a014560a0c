#ifndef MDPROD_BOUNDARY_SETS_HPP
#define MDPROD_BOUNDARY_SETS_HPP

#include "mdprod/digraph.hpp"
#include "mdprod/metric.hpp"

namespace mdprod {

/// Which neighborhood the boundary and contour tests scan. Both variants give
/// the same sets; the closed one exists so that can be checked.
enum class Neighborhood { open, closed };

/// The four boundary-type sets of a strong digraph under md.
struct BoundaryProfile {
  VertexSet boundary;
  VertexSet eccentricity_set;
  VertexSet periphery;
  VertexSet contour;

  friend bool operator==(const BoundaryProfile&, const BoundaryProfile&) = default;
};

/// True iff no neighbor of v is md-farther from u than v is.
bool is_boundary_vertex_of(const MetricProfile& p, const Digraph& d, Vertex v, Vertex u,
                           Neighborhood mode = Neighborhood::open);

VertexSet boundary_set(const MetricProfile& p, const Digraph& d,
                       Neighborhood mode = Neighborhood::open);

/// Vertices w with md(u, w) = ecc(u), for a single vertex u.
VertexSet eccentric_vertices_of(const MetricProfile& p, Vertex u);

VertexSet eccentric_set(const MetricProfile& p);
VertexSet periphery_set(const MetricProfile& p);
VertexSet contour_set(const MetricProfile& p, const Digraph& d,
                      Neighborhood mode = Neighborhood::open);

BoundaryProfile boundary_profile(const MetricProfile& p, const Digraph& d,
                                 Neighborhood mode = Neighborhood::open);

}  // namespace mdprod

#endif  // MDPROD_BOUNDARY_SETS_HPP
