#include "mdprod/digraph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "mdprod/error.hpp"

namespace mdprod {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::ranges::sort(members_);
  auto dup = std::ranges::unique(members_);
  members_.erase(dup.begin(), dup.end());
}

VertexSet VertexSet::all(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  VertexSet s;
  s.members_ = std::move(v);
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::ranges::binary_search(members_, v); }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::ranges::includes(other.members_, members_);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::ranges::set_union(a.members(), b.members(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::ranges::set_intersection(a.members(), b.members(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_symmetric_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::ranges::set_symmetric_difference(a.members(), b.members(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Digraph Digraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  if (n == 0) throw Error(Errc::invalid_config, "digraph must have at least one vertex");
  if (n > std::size_t{1} << 32) throw Error(Errc::size_overflow, "vertex count exceeds 32-bit ids");
  Digraph d;
  d.out_.resize(n);
  d.in_.resize(n);
  d.arcs_.assign(arcs.begin(), arcs.end());
  for (const auto& [tail, head] : d.arcs_) {
    if (tail >= n || head >= n) {
      throw Error(Errc::vertex_out_of_range, "arc (" + std::to_string(tail) + ", " +
                                                 std::to_string(head) + ") has an endpoint >= " +
                                                 std::to_string(n));
    }
    if (tail == head) throw Error(Errc::loop_arc, "loop arc at vertex " + std::to_string(tail));
  }
  std::ranges::sort(d.arcs_);
  if (auto it = std::ranges::adjacent_find(d.arcs_); it != d.arcs_.end()) {
    throw Error(Errc::parallel_arc, "arc (" + std::to_string(it->first) + ", " +
                                        std::to_string(it->second) + ") appears more than once");
  }
  for (const auto& [tail, head] : d.arcs_) {
    d.out_[tail].push_back(head);
    d.in_[head].push_back(tail);
  }
  // arcs_ is sorted by tail then head, so out_ is sorted; in_ receives tails in
  // increasing order for every fixed head as well.
  return d;
}

void Digraph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
  }
}

std::span<const Vertex> Digraph::out_adjacent(Vertex v) const {
  check_vertex(v);
  return out_[v];
}

std::span<const Vertex> Digraph::in_adjacent(Vertex v) const {
  check_vertex(v);
  return in_[v];
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  return std::ranges::binary_search(out_adjacent(tail), head);
}

VertexSet out_neighbors(const Digraph& d, Vertex v) {
  auto adj = d.out_adjacent(v);
  return VertexSet(std::vector<Vertex>(adj.begin(), adj.end()));
}

VertexSet in_neighbors(const Digraph& d, Vertex v) {
  auto adj = d.in_adjacent(v);
  return VertexSet(std::vector<Vertex>(adj.begin(), adj.end()));
}

VertexSet neighbors(const Digraph& d, Vertex v) {
  return set_union(out_neighbors(d, v), in_neighbors(d, v));
}

VertexSet closed_neighbors(const Digraph& d, Vertex v) {
  return set_union(neighbors(d, v), VertexSet{v});
}

// Iterative Tarjan; the digraph is strong iff the first completed component
// covers every vertex.
bool is_strong(const Digraph& d) {
  const std::size_t n = d.order();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // (vertex, next out-arc position)
  std::size_t counter = 0;

  index[0] = low[0] = counter++;
  stack.push_back(0);
  call.emplace_back(0, 0);
  while (!call.empty()) {
    auto& [v, pos] = call.back();
    auto adj = d.out_adjacent(v);
    if (pos < adj.size()) {
      Vertex w = adj[pos++];
      if (index[w] == unvisited) {
        index[w] = low[w] = counter++;
        stack.push_back(w);
        call.emplace_back(w, 0);
      } else {
        low[v] = std::min(low[v], index[w]);
      }
      continue;
    }
    Vertex done = v;
    call.pop_back();
    if (!call.empty()) {
      Vertex parent = call.back().first;
      low[parent] = std::min(low[parent], low[done]);
    }
    if (low[done] == index[done]) {
      // Root of a component: strong iff nothing else was ever discovered
      // outside it and it spans all n vertices.
      std::size_t size = 0;
      while (true) {
        Vertex w = stack.back();
        stack.pop_back();
        ++size;
        if (w == done) break;
      }
      return size == n;
    }
  }
  return false;
}

}  // namespace mdprod
