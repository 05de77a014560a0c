#include "mdprod/metric.hpp"

#include <algorithm>
#include <string>

#include "mdprod/error.hpp"

namespace mdprod {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
  }
}

}  // namespace

std::vector<Hops> directed_distances_from(const Digraph& d, Vertex source) {
  check_vertex(d.order(), source);
  std::vector<Hops> dist(d.order(), unreachable);
  std::vector<Vertex> frontier{source};
  std::vector<Vertex> next;
  dist[source] = 0;
  for (Hops level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (Vertex v : frontier) {
      for (Vertex w : d.out_adjacent(v)) {
        if (dist[w] == unreachable) {
          dist[w] = level;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

DistanceMatrix DistanceMatrix::of(const Digraph& d) {
  DistanceMatrix m;
  m.n_ = d.order();
  m.d_.reserve(m.n_ * m.n_);
  for (std::size_t s = 0; s < m.n_; ++s) {
    auto row = directed_distances_from(d, static_cast<Vertex>(s));
    if (auto it = std::ranges::find(row, unreachable); it != row.end()) {
      throw Error(Errc::not_strong, "digraph is not strong: no directed path from " +
                                        std::to_string(s) + " to " +
                                        std::to_string(it - row.begin()));
    }
    m.d_.insert(m.d_.end(), row.begin(), row.end());
  }
  return m;
}

Hops DistanceMatrix::at(Vertex from, Vertex to) const {
  check_vertex(n_, from);
  check_vertex(n_, to);
  return d_[from * n_ + to];
}

std::span<const Hops> DistanceMatrix::row(Vertex from) const {
  check_vertex(n_, from);
  return std::span<const Hops>(d_).subspan(from * n_, n_);
}

Hops max_distance(const DistanceMatrix& m, Vertex u, Vertex v) {
  return std::max(m.at(u, v), m.at(v, u));
}

Hops sum_distance(const DistanceMatrix& m, Vertex u, Vertex v) { return m.at(u, v) + m.at(v, u); }

MetricProfile::MetricProfile(std::size_t n, std::vector<Hops> md)
    : n_(n), md_(std::move(md)), ecc_(n, 0) {
  for (std::size_t v = 0; v < n_; ++v) {
    auto row = std::span<const Hops>(md_).subspan(v * n_, n_);
    ecc_[v] = *std::ranges::max_element(row);
  }
  radius_ = *std::ranges::min_element(ecc_);
  diameter_ = *std::ranges::max_element(ecc_);
}

Hops MetricProfile::md(Vertex u, Vertex v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  return md_[u * n_ + v];
}

std::span<const Hops> MetricProfile::md_row(Vertex u) const {
  check_vertex(n_, u);
  return std::span<const Hops>(md_).subspan(u * n_, n_);
}

Hops MetricProfile::ecc(Vertex v) const {
  check_vertex(n_, v);
  return ecc_[v];
}

MetricProfile metric_profile(const DistanceMatrix& m) {
  const std::size_t n = m.order();
  std::vector<Hops> md(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      md[u * n + v] = std::max(m.at(static_cast<Vertex>(u), static_cast<Vertex>(v)),
                               m.at(static_cast<Vertex>(v), static_cast<Vertex>(u)));
    }
  }
  return MetricProfile(n, std::move(md));
}

MetricProfile metric_profile(const Digraph& d) { return metric_profile(DistanceMatrix::of(d)); }

}  // namespace mdprod
