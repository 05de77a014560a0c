#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mdprod/io.hpp"
#include "mdprod/metric.hpp"

using namespace mdprod;
using testing::error_code_of;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    return e.line().value_or(0);
  }
  return 0;
}

}  // namespace

TEST_CASE("parse_edge_list") {
  CHECK(parse_edge_list("n 3\n0 1\n1 0\n1 2\n2 1") == testing::example1_d1());
  CHECK(parse_edge_list("n 3\n0 1\n1 0\n1 2\n2 1\n") == testing::example1_d1());
  CHECK(parse_edge_list("n 1") == testing::k1());
  CHECK(parse_edge_list("# comment\n\nn 2   # header\n 0\t1 \n1 0 # back\n") ==
        Digraph::from_arcs(2, {{0, 1}, {1, 0}}));
  CHECK(parse_edge_list("n 2\r\n0 1\r\n1 0\r\n") == Digraph::from_arcs(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("parse_edge_list names") {
  const auto doc = parse_edge_list_document("n 3\nname 0 u1\nname 2 u3\n0 1\n1 0\n");
  CHECK(doc.labels == std::vector<std::string>{"u1", "1", "u3"});
}

TEST_CASE("parse_edge_list errors carry the line") {
  CHECK(error_code_of([] { parse_edge_list("n 2\n0 2"); }) == Errc::vertex_out_of_range);
  CHECK(error_line("n 2\n0 2") == 2);
  CHECK(error_code_of([] { parse_edge_list("n 2\n\n1 1"); }) == Errc::loop_arc);
  CHECK(error_line("n 2\n\n1 1") == 3);
  CHECK(error_code_of([] { parse_edge_list("n 2\n0 1\n0 1\n"); }) == Errc::parallel_arc);
  CHECK(error_line("n 2\n0 1\n0 1\n") == 3);
  CHECK(error_code_of([] { parse_edge_list("0 1\n"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_edge_list(""); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_edge_list("n 0"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_edge_list("n 2\n0 x\n"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_edge_list("n 2\n0 1 1\n"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_edge_list("n 2\n-1 1\n"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_edge_list("n 2\nn 3\n"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_edge_list("n 2\nname 5 x\n"); }) == Errc::vertex_out_of_range);
  CHECK(error_line("n 2\n0 1\nname 1\n") == 3);
}

TEST_CASE("property: serialize then parse is the identity") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
    const Digraph d = testing::to_digraph(n, oracle::random_arcs(rng, n, 0.3));
    std::vector<std::string> labels = default_labels(n);
    if (n > 1) labels[1] = "w" + std::to_string(t);
    const auto doc = parse_edge_list_document(serialize_edge_list(d, labels));
    CHECK(doc.graph == d);
    CHECK(doc.labels == labels);
  }
}

TEST_CASE("generator") {
  SUBCASE("single vertex") {
    const auto g = generate_strong_digraph({.n = 1, .p = 0.3, .seed = 1});
    CHECK(g.digraph == testing::k1());
    CHECK_FALSE(g.augmented);
  }
  SUBCASE("p = 1 gives the complete digraph") {
    const auto g = generate_strong_digraph({.n = 5, .p = 1.0, .seed = 9});
    CHECK(g.digraph == testing::complete_bidirected(5));
    CHECK(metric_profile(g.digraph).diameter() == 1);
  }
  SUBCASE("deterministic for a fixed config") {
    const GeneratorConfig cfg{.n = 6, .p = 0.3, .seed = 42};
    CHECK(serialize_edge_list(generate_strong_digraph(cfg).digraph) ==
          serialize_edge_list(generate_strong_digraph(cfg).digraph));
    GeneratorConfig other = cfg;
    other.seed = 43;
    CHECK(is_strong(generate_strong_digraph(other).digraph));
  }
  SUBCASE("exhausted budget adds the Hamiltonian cycle") {
    const auto g = generate_strong_digraph({.n = 4, .p = 0.0, .seed = 1, .max_retries = 3});
    CHECK(g.augmented);
    CHECK(g.attempts == 3);
    CHECK(g.digraph == testing::directed_cycle(4));
  }
  SUBCASE("bidirected samples are symmetric") {
    const auto g = generate_strong_digraph({.n = 7, .p = 0.4, .seed = 5, .bidirected = true});
    CHECK(is_strong(g.digraph));
    for (auto [a, b] : g.digraph.arcs()) CHECK(g.digraph.has_arc(b, a));
  }
  SUBCASE("invalid configurations") {
    CHECK(error_code_of([] { generate_strong_digraph({.n = 0}); }) == Errc::invalid_config);
    CHECK(error_code_of([] { generate_strong_digraph({.n = 3, .p = 1.5}); }) ==
          Errc::invalid_config);
    CHECK(error_code_of([] { generate_strong_digraph({.n = 3, .p = -0.1}); }) ==
          Errc::invalid_config);
  }
  SUBCASE("every sample is strong") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto g = generate_strong_digraph({.n = 1 + seed % 9, .p = 0.25, .seed = seed});
      CHECK(is_strong(g.digraph));
    }
  }
}

TEST_CASE("export_dot") {
  const Digraph d1 = testing::example1_d1();
  const std::vector<std::string> labels{"u1", "u2", "u3"};
  const BoundaryProfile b1 = boundary_profile(metric_profile(d1), d1);
  const std::string dot = export_dot(d1, labels, &select_set(b1, "boundary"));
  CHECK(dot.find("digraph D {") == 0);
  CHECK(dot.find("0 [label=\"u1\", style=filled") != std::string::npos);
  CHECK(dot.find("2 [label=\"u3\", style=filled") != std::string::npos);
  CHECK(dot.find("1 [label=\"u2\"];") != std::string::npos);
  CHECK(dot.find("1 -> 2;") != std::string::npos);

  const std::string single = export_dot(testing::k1());
  CHECK(single == "digraph D {\n  node [shape=circle];\n  0 [label=\"0\"];\n}\n");

  CHECK(error_code_of([&] { select_set(b1, "hull"); }) == Errc::unknown_set_name);
  CHECK(&select_set(b1, "contour") == &b1.contour);
  CHECK(&select_set(b1, "eccentricity") == &b1.eccentricity_set);
  CHECK(&select_set(b1, "periphery") == &b1.periphery);
}
