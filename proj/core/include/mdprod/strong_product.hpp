#ifndef MDPROD_STRONG_PRODUCT_HPP
#define MDPROD_STRONG_PRODUCT_HPP

#include <cstddef>
#include <vector>

#include "mdprod/boundary_sets.hpp"
#include "mdprod/digraph.hpp"
#include "mdprod/metric.hpp"

namespace mdprod {

/// A product vertex (u_i, v_r) by its factor coordinates.
struct ProductVertex {
  Vertex first;
  Vertex second;
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

/// Bijection between V(D1) x V(D2) and 0..n1*n2-1, row-major in the first factor.
class ProductLabel {
 public:
  ProductLabel(std::size_t n1, std::size_t n2);

  std::size_t first_order() const noexcept { return n1_; }
  std::size_t second_order() const noexcept { return n2_; }
  std::size_t size() const noexcept { return n1_ * n2_; }

  Vertex encode(ProductVertex pv) const;
  ProductVertex decode(Vertex v) const;

 private:
  std::size_t n1_;
  std::size_t n2_;
};

/// Product vertex limit used when a product is built explicitly.
inline constexpr std::size_t default_vertex_budget = 10'000;

struct StrongProduct {
  Digraph digraph;
  ProductLabel label;
};

/// Builds D1 x D2 with arcs (i,r)->(j,s) whenever (i,j) in E1 and r = s, or
/// i = j and (r,s) in E2, or both (i,j) in E1 and (r,s) in E2.
/// Throws Error{size_overflow} when n1*n2 exceeds `vertex_budget`.
StrongProduct strong_product(const Digraph& d1, const Digraph& d2,
                             std::size_t vertex_budget = default_vertex_budget);

/// Everything the factor formulas read: both strong factors with their metric
/// and boundary profiles.
class FactorPair {
 public:
  /// Throws Error{not_strong} if either factor is not strong.
  FactorPair(Digraph d1, Digraph d2);

  const Digraph& d1() const noexcept { return d1_; }
  const Digraph& d2() const noexcept { return d2_; }
  const MetricProfile& p1() const noexcept { return p1_; }
  const MetricProfile& p2() const noexcept { return p2_; }
  const BoundaryProfile& b1() const noexcept { return b1_; }
  const BoundaryProfile& b2() const noexcept { return b2_; }
  ProductLabel label() const { return ProductLabel(d1_.order(), d2_.order()); }

  /// The same pair with the factors exchanged.
  FactorPair swapped() const;

 private:
  FactorPair(Digraph d1, Digraph d2, MetricProfile p1, MetricProfile p2, BoundaryProfile b1,
             BoundaryProfile b2);

  Digraph d1_;
  Digraph d2_;
  MetricProfile p1_;
  MetricProfile p2_;
  BoundaryProfile b1_;
  BoundaryProfile b2_;
};

/// md((i,r),(j,s)) = max(md1(i,j), md2(r,s)).
Hops product_distance(const FactorPair& f, ProductVertex a, ProductVertex b);

/// Eccentricities, radius and diameter of the product from the factor
/// profiles alone; linear in the product order.
struct ProductEccentricities {
  std::vector<Hops> ecc;  // indexed by ProductLabel::encode
  Hops radius = 0;
  Hops diameter = 0;
};
ProductEccentricities product_eccentricities(const FactorPair& f);

/// Full md profile of the product without running BFS on it. The md table is
/// quadratic in n1*n2, so this throws Error{size_overflow} above `vertex_budget`.
MetricProfile product_metric_profile(const FactorPair& f,
                                     std::size_t vertex_budget = default_vertex_budget);

/// Boundary of the product as A1 u A2 u A3:
///   A1 = bd(D1) x bd(D2)
///   A2 = {(i,r) : i in bd(D1), r not in bd(D2), md2(r,s) <= ecc1(i) for all s in N(r)}
///   A3 = {(i,r) : i not in bd(D1), r in bd(D2), md1(i,p) <= ecc2(r) for all p in N(i)}
/// `mode` selects N(.) or N[.] for the A2/A3 scans.
VertexSet product_boundary_via_factors(const FactorPair& f,
                                       Neighborhood mode = Neighborhood::open);

/// Per(D1 x D2): V1 x Per(D2) when diam1 < diam2, Per(D1) x V2 u V1 x Per(D2)
/// when equal, and the mirror image when diam1 > diam2.
VertexSet product_periphery_via_factors(const FactorPair& f);

/// Ecc(D1 x D2). With equal radii this is Ecc(D1) x V2 u V1 x Ecc(D2). When
/// rad1 < rad2 the first term becomes A x V2, where A collects the eccentric
/// vertices of every u_i with ecc1(u_i) >= rad2. rad1 > rad2 is mirrored.
VertexSet product_eccentric_via_factors(const FactorPair& f);

/// Ct(D1 x D2) = {(i,r) : i in Ct(D1), ecc2(r) < ecc1(i)}
///             u {(i,r) : r in Ct(D2), ecc1(i) < ecc2(r)} u Ct(D1) x Ct(D2).
VertexSet product_contour_via_factors(const FactorPair& f);

/// All four sets from the factor formulas.
BoundaryProfile product_profile_via_factors(const FactorPair& f,
                                            Neighborhood mode = Neighborhood::open);

/// All four sets computed directly on the explicitly built product.
BoundaryProfile product_profile_direct(const FactorPair& f,
                                       Neighborhood mode = Neighborhood::open,
                                       std::size_t vertex_budget = default_vertex_budget);

/// Compares the undirected-graph identity bd(G x H) = bd(G) x V(H) u V(G) x bd(H)
/// against the true boundary of the built product.
struct UndirectedFormulaReport {
  VertexSet candidate;
  VertexSet actual;
  VertexSet difference;  // symmetric difference of the two
};
UndirectedFormulaReport undirected_formula_counterexample(
    const FactorPair& f, std::size_t vertex_budget = default_vertex_budget);

/// Maps a set over D1 x D2 onto D2 x D1 by swapping coordinates.
VertexSet swap_coordinates(const VertexSet& s, const ProductLabel& label);

}  // namespace mdprod

#endif  // MDPROD_STRONG_PRODUCT_HPP
