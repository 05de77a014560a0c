#include "mdprod/strong_product.hpp"

#include <algorithm>
#include <string>

#include "mdprod/error.hpp"

namespace mdprod {

namespace {

std::size_t checked_product_order(std::size_t n1, std::size_t n2, std::size_t budget) {
  if (n2 != 0 && n1 > budget / n2) {
    throw Error(Errc::size_overflow, "product of orders " + std::to_string(n1) + " and " +
                                         std::to_string(n2) + " exceeds the vertex budget of " +
                                         std::to_string(budget));
  }
  return n1 * n2;
}

std::vector<std::vector<Vertex>> neighbor_lists(const Digraph& d, Neighborhood mode) {
  std::vector<std::vector<Vertex>> out(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    auto s = mode == Neighborhood::open ? neighbors(d, v) : closed_neighbors(d, v);
    out[v].assign(s.begin(), s.end());
  }
  return out;
}

// Emits every pair (i, r) satisfying `keep`, encoded under `label`.
template <typename Pred>
VertexSet collect(const ProductLabel& label, Pred keep) {
  std::vector<Vertex> out;
  for (Vertex i = 0; i < label.first_order(); ++i) {
    for (Vertex r = 0; r < label.second_order(); ++r) {
      if (keep(i, r)) out.push_back(label.encode({i, r}));
    }
  }
  return VertexSet(std::move(out));
}

// Periphery when diam(first) <= diam(second).
VertexSet oriented_periphery(const FactorPair& f) {
  const bool tie = f.p1().diameter() == f.p2().diameter();
  const auto& per1 = f.b1().periphery;
  const auto& per2 = f.b2().periphery;
  return collect(f.label(), [&](Vertex i, Vertex r) {
    return per2.contains(r) || (tie && per1.contains(i));
  });
}

// Eccentric set when rad(first) <= rad(second).
VertexSet oriented_eccentric(const FactorPair& f) {
  const auto& ecc2 = f.b2().eccentricity_set;
  VertexSet first_part;
  if (f.p1().radius() == f.p2().radius()) {
    first_part = f.b1().eccentricity_set;
  } else {
    const Hops threshold = f.p2().radius();
    std::vector<bool> hit(f.d1().order(), false);
    for (Vertex u = 0; u < f.d1().order(); ++u) {
      if (f.p1().ecc(u) < threshold) continue;
      for (Vertex w : eccentric_vertices_of(f.p1(), u)) hit[w] = true;
    }
    std::vector<Vertex> members;
    for (Vertex u = 0; u < hit.size(); ++u) {
      if (hit[u]) members.push_back(u);
    }
    first_part = VertexSet(std::move(members));
  }
  return collect(f.label(), [&](Vertex i, Vertex r) {
    return first_part.contains(i) || ecc2.contains(r);
  });
}

}  // namespace

ProductLabel::ProductLabel(std::size_t n1, std::size_t n2) : n1_(n1), n2_(n2) {
  if (n1 == 0 || n2 == 0) throw Error(Errc::invalid_config, "product factors must be nonempty");
  if (n1 > (std::size_t{1} << 32) / n2) {
    throw Error(Errc::size_overflow, "product order does not fit 32-bit vertex ids");
  }
}

Vertex ProductLabel::encode(ProductVertex pv) const {
  if (pv.first >= n1_ || pv.second >= n2_) {
    throw Error(Errc::vertex_out_of_range, "product coordinate (" + std::to_string(pv.first) +
                                               ", " + std::to_string(pv.second) +
                                               ") out of range");
  }
  return static_cast<Vertex>(pv.first * n2_ + pv.second);
}

ProductVertex ProductLabel::decode(Vertex v) const {
  if (v >= size()) {
    throw Error(Errc::vertex_out_of_range, "product vertex " + std::to_string(v) + " out of range");
  }
  return {static_cast<Vertex>(v / n2_), static_cast<Vertex>(v % n2_)};
}

StrongProduct strong_product(const Digraph& d1, const Digraph& d2, std::size_t vertex_budget) {
  const std::size_t n = checked_product_order(d1.order(), d2.order(), vertex_budget);
  ProductLabel label(d1.order(), d2.order());
  const auto n1 = static_cast<Vertex>(d1.order());
  const auto n2 = static_cast<Vertex>(d2.order());

  std::vector<Arc> arcs;
  arcs.reserve(d1.arc_count() * n2 + n1 * d2.arc_count() + d1.arc_count() * d2.arc_count());
  for (const auto& [i, j] : d1.arcs()) {
    for (Vertex r = 0; r < n2; ++r) arcs.emplace_back(label.encode({i, r}), label.encode({j, r}));
  }
  for (Vertex i = 0; i < n1; ++i) {
    for (const auto& [r, s] : d2.arcs()) {
      arcs.emplace_back(label.encode({i, r}), label.encode({i, s}));
    }
  }
  for (const auto& [i, j] : d1.arcs()) {
    for (const auto& [r, s] : d2.arcs()) {
      arcs.emplace_back(label.encode({i, r}), label.encode({j, s}));
    }
  }
  return StrongProduct{Digraph::from_arcs(n, arcs), label};
}

FactorPair::FactorPair(Digraph d1, Digraph d2)
    : FactorPair(d1, d2, metric_profile(d1), metric_profile(d2), BoundaryProfile{},
                 BoundaryProfile{}) {
  b1_ = boundary_profile(p1_, d1_);
  b2_ = boundary_profile(p2_, d2_);
}

FactorPair::FactorPair(Digraph d1, Digraph d2, MetricProfile p1, MetricProfile p2,
                       BoundaryProfile b1, BoundaryProfile b2)
    : d1_(std::move(d1)),
      d2_(std::move(d2)),
      p1_(std::move(p1)),
      p2_(std::move(p2)),
      b1_(std::move(b1)),
      b2_(std::move(b2)) {}

FactorPair FactorPair::swapped() const { return FactorPair(d2_, d1_, p2_, p1_, b2_, b1_); }

Hops product_distance(const FactorPair& f, ProductVertex a, ProductVertex b) {
  return std::max(f.p1().md(a.first, b.first), f.p2().md(a.second, b.second));
}

ProductEccentricities product_eccentricities(const FactorPair& f) {
  const ProductLabel label = f.label();
  ProductEccentricities out;
  out.ecc.resize(label.size());
  for (Vertex i = 0; i < label.first_order(); ++i) {
    for (Vertex r = 0; r < label.second_order(); ++r) {
      out.ecc[label.encode({i, r})] = std::max(f.p1().ecc(i), f.p2().ecc(r));
    }
  }
  out.radius = std::max(f.p1().radius(), f.p2().radius());
  out.diameter = std::max(f.p1().diameter(), f.p2().diameter());
  return out;
}

MetricProfile product_metric_profile(const FactorPair& f, std::size_t vertex_budget) {
  const std::size_t n = checked_product_order(f.d1().order(), f.d2().order(), vertex_budget);
  const ProductLabel label = f.label();
  std::vector<Hops> md(n * n);
  for (Vertex a = 0; a < n; ++a) {
    const ProductVertex pa = label.decode(a);
    for (Vertex b = 0; b < n; ++b) md[a * n + b] = product_distance(f, pa, label.decode(b));
  }
  return MetricProfile(n, std::move(md));
}

VertexSet product_boundary_via_factors(const FactorPair& f, Neighborhood mode) {
  const auto& bd1 = f.b1().boundary;
  const auto& bd2 = f.b2().boundary;
  const auto nb1 = neighbor_lists(f.d1(), mode);
  const auto nb2 = neighbor_lists(f.d2(), mode);
  // For A2 the condition on (i, r) depends on r only through max md2(r, s)
  // over s in N(r); likewise for A3.
  std::vector<Hops> reach1(f.d1().order(), 0), reach2(f.d2().order(), 0);
  for (Vertex i = 0; i < reach1.size(); ++i) {
    for (Vertex p : nb1[i]) reach1[i] = std::max(reach1[i], f.p1().md(i, p));
  }
  for (Vertex r = 0; r < reach2.size(); ++r) {
    for (Vertex s : nb2[r]) reach2[r] = std::max(reach2[r], f.p2().md(r, s));
  }
  return collect(f.label(), [&](Vertex i, Vertex r) {
    const bool in1 = bd1.contains(i);
    const bool in2 = bd2.contains(r);
    if (in1 && in2) return true;
    if (in1) return reach2[r] <= f.p1().ecc(i);
    if (in2) return reach1[i] <= f.p2().ecc(r);
    return false;
  });
}

VertexSet product_periphery_via_factors(const FactorPair& f) {
  if (f.p1().diameter() <= f.p2().diameter()) return oriented_periphery(f);
  const FactorPair flipped = f.swapped();
  return swap_coordinates(oriented_periphery(flipped), flipped.label());
}

VertexSet product_eccentric_via_factors(const FactorPair& f) {
  if (f.p1().radius() <= f.p2().radius()) return oriented_eccentric(f);
  const FactorPair flipped = f.swapped();
  return swap_coordinates(oriented_eccentric(flipped), flipped.label());
}

VertexSet product_contour_via_factors(const FactorPair& f) {
  const auto& ct1 = f.b1().contour;
  const auto& ct2 = f.b2().contour;
  return collect(f.label(), [&](Vertex i, Vertex r) {
    const Hops e1 = f.p1().ecc(i);
    const Hops e2 = f.p2().ecc(r);
    const bool in1 = ct1.contains(i);
    const bool in2 = ct2.contains(r);
    return (in1 && e2 < e1) || (in2 && e1 < e2) || (in1 && in2);
  });
}

BoundaryProfile product_profile_via_factors(const FactorPair& f, Neighborhood mode) {
  return BoundaryProfile{
      .boundary = product_boundary_via_factors(f, mode),
      .eccentricity_set = product_eccentric_via_factors(f),
      .periphery = product_periphery_via_factors(f),
      .contour = product_contour_via_factors(f),
  };
}

BoundaryProfile product_profile_direct(const FactorPair& f, Neighborhood mode,
                                       std::size_t vertex_budget) {
  const StrongProduct product = strong_product(f.d1(), f.d2(), vertex_budget);
  return boundary_profile(metric_profile(product.digraph), product.digraph, mode);
}

UndirectedFormulaReport undirected_formula_counterexample(const FactorPair& f,
                                                          std::size_t vertex_budget) {
  const StrongProduct product = strong_product(f.d1(), f.d2(), vertex_budget);
  UndirectedFormulaReport report;
  const auto& bd1 = f.b1().boundary;
  const auto& bd2 = f.b2().boundary;
  report.candidate = collect(product.label, [&](Vertex i, Vertex r) {
    return bd1.contains(i) || bd2.contains(r);
  });
  report.actual = boundary_set(metric_profile(product.digraph), product.digraph);
  report.difference = set_symmetric_difference(report.candidate, report.actual);
  return report;
}

VertexSet swap_coordinates(const VertexSet& s, const ProductLabel& label) {
  const ProductLabel mirrored(label.second_order(), label.first_order());
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) {
    const ProductVertex pv = label.decode(v);
    out.push_back(mirrored.encode({pv.second, pv.first}));
  }
  return VertexSet(std::move(out));
}

}  // namespace mdprod
