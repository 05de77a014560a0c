#ifndef MDPROD_METRIC_HPP
#define MDPROD_METRIC_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mdprod/digraph.hpp"

namespace mdprod {

using Hops = std::uint32_t;

/// Marker for "no directed path" in a single-source distance vector.
inline constexpr Hops unreachable = std::numeric_limits<Hops>::max();

/// Shortest directed hop counts from `source`; unreachable vertices hold
/// `unreachable`.
std::vector<Hops> directed_distances_from(const Digraph& d, Vertex source);

/// All-pairs directed distances of a strong digraph.
class DistanceMatrix {
 public:
  /// Throws Error{not_strong} naming an unreachable ordered pair.
  static DistanceMatrix of(const Digraph& d);

  std::size_t order() const noexcept { return n_; }
  /// Length of a shortest directed from -> to path.
  Hops at(Vertex from, Vertex to) const;
  std::span<const Hops> row(Vertex from) const;

 private:
  std::size_t n_ = 0;
  std::vector<Hops> d_;
};

inline DistanceMatrix all_pairs_directed(const Digraph& d) { return DistanceMatrix::of(d); }

/// md(u, v) = max(d(u, v), d(v, u)).
Hops max_distance(const DistanceMatrix& m, Vertex u, Vertex v);
/// sd(u, v) = d(u, v) + d(v, u).
Hops sum_distance(const DistanceMatrix& m, Vertex u, Vertex v);

/// Maximum-distance table plus eccentricities, radius and diameter.
class MetricProfile {
 public:
  MetricProfile(std::size_t n, std::vector<Hops> md);

  std::size_t order() const noexcept { return n_; }
  Hops md(Vertex u, Vertex v) const;
  std::span<const Hops> md_row(Vertex u) const;
  Hops ecc(Vertex v) const;
  std::span<const Hops> eccentricities() const noexcept { return ecc_; }
  Hops radius() const noexcept { return radius_; }
  Hops diameter() const noexcept { return diameter_; }

 private:
  std::size_t n_;
  std::vector<Hops> md_;
  std::vector<Hops> ecc_;
  Hops radius_ = 0;
  Hops diameter_ = 0;
};

MetricProfile metric_profile(const DistanceMatrix& m);
/// Throws Error{not_strong}.
MetricProfile metric_profile(const Digraph& d);

}  // namespace mdprod

#endif  // MDPROD_METRIC_HPP
