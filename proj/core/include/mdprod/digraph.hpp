#ifndef MDPROD_DIGRAPH_HPP
#define MDPROD_DIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace mdprod {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  /// Sorts and deduplicates `members`.
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet all(std::size_t n);

  bool contains(Vertex v) const;
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  std::span<const Vertex> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_symmetric_difference(const VertexSet& a, const VertexSet& b);

/// Loop-free digraph without parallel arcs on vertices 0..n-1. Immutable once
/// built; adjacency lists are kept sorted.
class Digraph {
 public:
  /// Throws Error{loop_arc | parallel_arc | vertex_out_of_range}. n must be >= 1.
  static Digraph from_arcs(std::size_t n, std::span<const Arc> arcs);
  static Digraph from_arcs(std::size_t n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  /// Arcs in lexicographic (tail, head) order.
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_adjacent(Vertex v) const;
  std::span<const Vertex> in_adjacent(Vertex v) const;
  bool has_arc(Vertex tail, Vertex head) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order() == b.order() && a.arcs_ == b.arcs_;
  }

 private:
  Digraph() = default;
  void check_vertex(Vertex v) const;

  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

VertexSet out_neighbors(const Digraph& d, Vertex v);
VertexSet in_neighbors(const Digraph& d, Vertex v);
/// N(v) = N+(v) u N-(v); never contains v.
VertexSet neighbors(const Digraph& d, Vertex v);
/// N[v] = N(v) u {v}.
VertexSet closed_neighbors(const Digraph& d, Vertex v);

/// True iff every ordered pair of vertices is joined by a directed path.
bool is_strong(const Digraph& d);

}  // namespace mdprod

#endif  // MDPROD_DIGRAPH_HPP
