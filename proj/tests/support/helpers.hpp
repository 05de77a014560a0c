#ifndef MDPROD_TESTS_HELPERS_HPP
#define MDPROD_TESTS_HELPERS_HPP

#include <set>
#include <string>
#include <vector>

#include "mdprod/digraph.hpp"
#include "mdprod/error.hpp"
#include "oracles.hpp"

namespace testing {

inline mdprod::Digraph to_digraph(unsigned n, const oracle::ArcList& arcs) {
  std::vector<mdprod::Arc> out;
  for (auto [a, b] : arcs) out.emplace_back(a, b);
  return mdprod::Digraph::from_arcs(n, out);
}

inline mdprod::VertexSet to_set(const std::set<unsigned>& s) {
  return mdprod::VertexSet(std::vector<mdprod::Vertex>(s.begin(), s.end()));
}

// Example 1: D1 is the bidirected path u1-u2-u3, D2 the five-vertex digraph
// on v1..v5 (ids are label index minus one).
inline const oracle::ArcList example1_d1_arcs{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
inline const oracle::ArcList example1_d2_arcs{{0, 2}, {1, 0}, {1, 2}, {1, 4},
                                              {2, 1}, {2, 3}, {3, 2}, {4, 3}};

inline mdprod::Digraph example1_d1() { return to_digraph(3, example1_d1_arcs); }
inline mdprod::Digraph example1_d2() { return to_digraph(5, example1_d2_arcs); }
inline mdprod::Digraph k1() { return mdprod::Digraph::from_arcs(1, {}); }

inline mdprod::Digraph directed_cycle(unsigned n) {
  oracle::ArcList arcs;
  for (unsigned v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return to_digraph(n, arcs);
}

inline mdprod::Digraph complete_bidirected(unsigned n) {
  oracle::ArcList arcs;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if (a != b) arcs.emplace_back(a, b);
  return to_digraph(n, arcs);
}

/// Product vertex id of (u_a, v_b) in Example 1, 1-based labels.
inline mdprod::Vertex uv(unsigned a, unsigned b) { return (a - 1) * 5 + (b - 1); }

template <typename F>
mdprod::Errc error_code_of(F&& f) {
  try {
    f();
  } catch (const mdprod::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected mdprod::Error");
}

inline std::string data_path(const std::string& name) {
  return std::string(MDPROD_TEST_DATA_DIR) + "/" + name;
}

}  // namespace testing

#endif  // MDPROD_TESTS_HELPERS_HPP
