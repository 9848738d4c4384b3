#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "splitgraph/text_format.hpp"

using namespace splitgraph;

namespace {

std::string data(const std::string& name) { return std::string(SPLITGRAPH_TEST_DATA) + "/" + name; }

int parse_error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_CASE("graph round trip over the corpus") {
  auto graphs = corpus::essential_graphs();
  for (const auto& g : corpus::boundary_graphs()) graphs.push_back(g);
  for (const auto& g : graphs) {
    CAPTURE(g.name());
    const auto text = serialize_graph(g);
    const auto back = parse_graph(text);
    CHECK(back == g);
    CHECK(serialize_graph(back) == text);
  }
}

TEST_CASE("graph files from disk") {
  const auto g = parse_graph(read_file(data("ga.graph")), "ga.graph");
  CHECK(g == corpus::graph_a());
  CHECK_THROWS_AS(read_file(data("missing.graph")), IoError);
}

TEST_CASE("graph parse errors carry file and line") {
  CHECK(parse_error_line([] { parse_graph("graph g\nvertex a\nedge e a b\n", "x.graph"); }) == 3);
  CHECK(parse_error_line([] { parse_graph("graph g\nvertex a\nvertex a\n"); }) == 3);
  CHECK(parse_error_line([] { parse_graph("# comment\n\nnode g\n"); }) == 3);
  CHECK(parse_error_line([] { parse_graph("graph g\nvertex a\nedge e a\n"); }) == 3);
  CHECK(parse_error_line([] { parse_graph("graph g\nvertex a\nedge e a a\nedge e a a\n"); }) == 4);
  CHECK(parse_error_line([] { parse_graph("graph g\nloop a\n"); }) == 2);
  try {
    parse_graph("graph g\nbogus\n", "in.graph");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("in.graph:2: ", 0) == 0);
    CHECK(e.file() == "in.graph");
  }
}

TEST_CASE("spec files") {
  const auto g = corpus::graph_a();
  const auto in = parse_split_spec(read_file(data("ga_insplit.spec")), g);
  REQUIRE(in.is_in_split());
  CHECK(in.in() == in_split_from_partition(g, 0, {{0, 3}, {2}}));
  const auto out = parse_split_spec(read_file(data("ga_outsplit.spec")), g);
  REQUIRE_FALSE(out.is_in_split());
  CHECK(out.out() == out_split_from_partition(g, 0, {{0}, {1}}));
}

TEST_CASE("spec round trip over the corpus") {
  for (const auto& g : corpus::essential_graphs()) {
    for (const auto& [label, spec] : corpus::in_splits(g)) {
      CAPTURE(g.name());
      CAPTURE(label);
      const auto text = serialize_spec(g, spec);
      const auto back = parse_split_spec(text, g);
      REQUIRE(back.is_in_split());
      CHECK(back.in() == spec);
      CHECK(serialize_spec(g, back.in()) == text);
    }
    for (const auto& [label, spec] : corpus::out_splits(g)) {
      const auto text = serialize_spec(g, spec);
      const auto back = parse_split_spec(text, g);
      REQUIRE_FALSE(back.is_in_split());
      CHECK(back.out() == spec);
    }
  }
}

TEST_CASE("spec parse errors") {
  const auto g = corpus::graph_a();
  CHECK(parse_error_line([&] { parse_split_spec("split\n", g); }) == 1);
  CHECK(parse_error_line([&] { parse_split_spec("insplit\npartition w { e h }\n", g); }) == 2);  // g missing
  CHECK(parse_error_line([&] { parse_split_spec("insplit\npartition w { e h { g }\n", g); }) == 2);
  CHECK(parse_error_line([&] { parse_split_spec("insplit\npartition x { e }\n", g); }) == 2);
  CHECK(parse_error_line([&] { parse_split_spec("insplit\npartition w { e h } { g }\npartition v { f }\n", g); }) == 3);
  CHECK(parse_error_line([&] { parse_split_spec("insplit\nnewvertex a over w\npsi e b\n", g); }) == 3);
  CHECK(parse_error_line([&] { parse_split_spec("outsplit\n# c\npartition w { e f } { }\n", g); }) == 3);
  CHECK_NOTHROW(parse_split_spec("outsplit\npartition w { e f } { }\n", g, "<input>", true));
}

TEST_CASE("matrix and witness round trips") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(0, 9), dim(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = dim(rng), n = dim(rng);
    IntMatrix r(m, n), s(n, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        r(i, j) = entry(rng);
        s(j, i) = entry(rng);
      }
    CHECK(parse_matrix(serialize_matrix(r)) == r);
    const SseWitness w{r, s, trial % 2 ? WitnessRoles::a_is_rs : WitnessRoles::b_is_rs};
    const auto text = serialize_witness(w);
    CHECK(parse_witness(text) == w);
    CHECK(serialize_witness(parse_witness(text)) == text);
  }
  CHECK(parse_witness("matrix 1 1\n2\nmatrix 1 1\n3\n").roles == WitnessRoles::a_is_rs);
  CHECK(parse_error_line([] { parse_matrix("matrix 2 2\n1 2\n3\n"); }) == 3);
  CHECK(parse_error_line([] { parse_matrix("matrix 1 1\nx\n"); }) == 2);
  CHECK(parse_error_line([] { parse_witness("roles A=SR\nmatrix 1 1\n1\nmatrix 1 1\n1\n"); }) == 1);
  CHECK(parse_error_line([] { parse_matrix("matrix 1 1\n1\n2\n"); }) == 3);
}

TEST_CASE("dot export") {
  const auto dot = export_dot(corpus::graph_a());
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t arcs = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++arcs;
  CHECK(arcs == 4);
  CHECK(export_dot(corpus::boundary_graphs()[3]).find("->") == std::string::npos);
}
