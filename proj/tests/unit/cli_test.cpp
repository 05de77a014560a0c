#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "mdprod_cli/commands.hpp"

using namespace mdprod;
using testing::data_path;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mdprod");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> strings(const nlohmann::json& j) {
  return j.get<std::vector<std::string>>();
}

}  // namespace

TEST_CASE("analyze") {
  SUBCASE("Example 1 D2") {
    const Result r = run_cli({"analyze", data_path("example1_d2.el")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["metric"]["eccentricities"] == nlohmann::json({4, 3, 2, 3, 4}));
    CHECK(strings(j["sets"]["boundary"]) == std::vector<std::string>{"v1", "v4", "v5"});
    CHECK(j["digraph"]["strong"] == true);
    CHECK(j["digraph"]["arcs"] == 8);
  }
  SUBCASE("K1") {
    const Result r = run_cli({"analyze", data_path("k1.el")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* name : {"boundary", "eccentricity", "periphery", "contour"})
      CHECK(strings(j["sets"][name]) == std::vector<std::string>{"0"});
  }
  SUBCASE("closed neighborhoods give the same report") {
    const Result open = run_cli({"analyze", data_path("example1_d2.el")});
    const Result closed =
        run_cli({"analyze", data_path("example1_d2.el"), "--neighborhood", "closed"});
    CHECK(open.out == closed.out);
  }
  SUBCASE("error exit codes") {
    const Result weak = run_cli({"analyze", data_path("not_strong.el")});
    CHECK(weak.code == cli::exit_not_strong);
    CHECK(weak.err.find("no directed path from 1 to 0") != std::string::npos);
    const Result bad = run_cli({"analyze", data_path("bad_vertex.el")});
    CHECK(bad.code == cli::exit_parse_error);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(run_cli({"analyze", data_path("missing.el")}).code == cli::exit_parse_error);
  }
  SUBCASE("pretty output") {
    const Result r = run_cli({"analyze", data_path("example1_d1.el"), "--pretty"});
    CHECK(r.code == 0);
    CHECK(r.out.find("boundary      {u1, u3}") != std::string::npos);
    CHECK(r.out.find("radius 1, diameter 2") != std::string::npos);
  }
  SUBCASE("reruns are byte-identical") {
    CHECK(run_cli({"analyze", data_path("example1_d2.el")}).out ==
          run_cli({"analyze", data_path("example1_d2.el")}).out);
  }
}

TEST_CASE("product") {
  const std::string d1 = data_path("example1_d1.el");
  const std::string d2 = data_path("example1_d2.el");

  SUBCASE("formula mode") {
    const Result r = run_cli({"product", d1, d2});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["digraph"]["n"] == 15);
    CHECK(j["digraph"]["arcs"] == 76);
    CHECK(j["metric"]["radius"] == 2);
    CHECK(j["metric"]["diameter"] == 4);
    CHECK(j["provenance"]["sets_from"] == "formula");
    CHECK(strings(j["sets"]["periphery"]) ==
          std::vector<std::string>{"(u1,v1)", "(u1,v5)", "(u2,v1)", "(u2,v5)", "(u3,v1)",
                                   "(u3,v5)"});
  }
  SUBCASE("oracle mode matches formula mode on metric data") {
    const auto formula = nlohmann::json::parse(run_cli({"product", d1, d2}).out);
    const Result r = run_cli({"product", d1, d2, "--mode", "oracle"});
    REQUIRE(r.code == 0);
    const auto oracle = nlohmann::json::parse(r.out);
    CHECK(oracle["metric"] == formula["metric"]);
    CHECK(oracle["digraph"] == formula["digraph"]);
    CHECK(oracle["sets"]["eccentricity"] == formula["sets"]["eccentricity"]);
  }
  SUBCASE("both mode reports the boundary disagreement") {
    const Result r = run_cli({"product", d1, d2, "--mode", "both"});
    CHECK(r.code == cli::exit_violation);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(strings(j["differences"]["boundary"]) ==
          std::vector<std::string>{"(u1,v2)", "(u3,v2)"});
    CHECK(j["differences"]["periphery"].empty());
    CHECK(j["differences"]["eccentricity"].empty());
    CHECK(j["differences"]["contour"].empty());
  }
  SUBCASE("product with K1 in both modes") {
    const Result r = run_cli({"product", d2, data_path("k1.el"), "--mode", "both"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(strings(j["sets"]["boundary"]) ==
          std::vector<std::string>{"(v1,0)", "(v4,0)", "(v5,0)"});
  }
  SUBCASE("budget and strongness") {
    CHECK(run_cli({"product", d1, d2, "--mode", "oracle", "--budget", "10"}).code ==
          cli::exit_size_overflow);
    CHECK(run_cli({"product", d1, data_path("not_strong.el")}).code == cli::exit_not_strong);
    CHECK(run_cli({"product", d1, d2, "--mode", "fast"}).code == cli::exit_invalid_usage);
  }
}

TEST_CASE("gen") {
  const Result a = run_cli({"gen", "--n", "6", "--p", "0.3", "--seed", "42"});
  const Result b = run_cli({"gen", "--n", "6", "--p", "0.3", "--seed", "42"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("augmented=no") != std::string::npos);
  CHECK(is_strong(parse_edge_list(a.out)));

  const Result aug = run_cli({"gen", "--n", "4", "--p", "0", "--max-retries", "2"});
  CHECK(aug.out.find("augmented=yes") != std::string::npos);
  CHECK(run_cli({"gen", "--n", "0"}).code == cli::exit_invalid_usage);
  CHECK(run_cli({"gen", "--n", "3", "--p", "2"}).code == cli::exit_invalid_usage);
}

TEST_CASE("export") {
  const Result r =
      run_cli({"export", data_path("example1_d1.el"), "--highlight", "boundary"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("[label=\"u1\", style=filled") != std::string::npos);
  CHECK(r.out.find("[label=\"u3\", style=filled") != std::string::npos);

  const Result product =
      run_cli({"export", data_path("example1_d1.el"), data_path("example1_d2.el")});
  REQUIRE(product.code == 0);
  std::size_t arrows = 0, pos = 0;
  while ((pos = product.out.find(" -> ", pos)) != std::string::npos) ++arrows, ++pos;
  CHECK(arrows == 76);
  CHECK(product.out.find("14 [label=\"(u3,v5)\"]") != std::string::npos);

  CHECK(run_cli({"export", data_path("k1.el"), "--highlight", "hull"}).code ==
        cli::exit_invalid_usage);
}

TEST_CASE("verify") {
  CHECK(run_cli({"verify", "--trials", "0"}).code == cli::exit_invalid_usage);

  const Result bi = run_cli({"verify", "--trials", "20", "--bidirected", "--seed", "4"});
  CHECK(bi.code == 0);
  CHECK(bi.out.find("result: PASS") != std::string::npos);
  CHECK(bi.out.find("boundary_formula                20/20 pass") != std::string::npos);

  // The default corpus exposes the directed-case mismatches and dumps a
  // counterexample as two edge lists.
  const Result r = run_cli({"verify", "--trials", "200", "--n-max", "7", "--seed", "7"});
  CHECK(r.code == cli::exit_violation);
  CHECK(r.out.find("periphery_formula               200/200 pass") != std::string::npos);
  CHECK(r.out.find("counterexample for") != std::string::npos);
  CHECK(r.out.find("# first factor\nn ") != std::string::npos);
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "mdprod_cli_test_report.json";
  const Result r = run_cli({"analyze", data_path("example1_d1.el"), "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(nlohmann::json::parse(buf.str())["metric"]["diameter"] == 2);
  std::filesystem::remove(path);
}
