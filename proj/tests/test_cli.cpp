#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "splitgraph/cli.hpp"
#include "splitgraph/text_format.hpp"

using namespace splitgraph;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return std::string(SPLITGRAPH_TEST_DATA) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / ("splitgraph_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string put(const std::string& name, const std::string& text) {
  const auto path = (scratch() / name).string();
  write_file(path, text);
  return path;
}

const char* kA = "matrix 2 2\n1 1\n2 0\n";
const char* kB = "matrix 3 3\n1 0 1\n1 0 1\n1 1 0\n";

}  // namespace

TEST_CASE("insplit writes the bare graph to stdout") {
  const auto r = call({"insplit", data("ga.graph"), data("ga_insplit.spec")});
  CHECK(r.code == kExitPass);
  const auto g = parse_graph(r.out);
  CHECK(adjacency_matrix(g) == IntMatrix{{1, 0, 1}, {1, 0, 1}, {1, 1, 0}});
}

TEST_CASE("output files and reports") {
  const auto path = (scratch() / "split.graph").string();
  const auto r = call({"outsplit", data("ga.graph"), data("ga_outsplit.spec"), "-o", path});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("wrote " + path) != std::string::npos);
  CHECK(adjacency_matrix(parse_graph(read_file(path))) == IntMatrix{{1, 1, 0}, {0, 0, 1}, {2, 2, 0}});
}

TEST_CASE("a split spec of the wrong kind is a usage error") {
  CHECK(call({"insplit", data("ga.graph"), data("ga_outsplit.spec")}).code == kExitUsage);
  CHECK(call({"corr-verify", data("ga.graph"), data("ga_insplit.spec"), "--out"}).code == kExitUsage);
}

TEST_CASE("dual and power") {
  const auto dual = call({"dual", data("loop.graph")});
  CHECK(dual.code == kExitPass);
  CHECK(dual.out.find("edge (l,l)") != std::string::npos);
  const auto power = call({"power", data("ga.graph"), "-n", "3"});
  CHECK(power.code == kExitPass);
  CHECK(adjacency_matrix(parse_graph(power.out)) == IntMatrix{{5, 3}, {6, 2}});
  CHECK(call({"power", data("ga.graph"), "-n", "0"}).code == kExitUsage);
}

TEST_CASE("witness then verify") {
  const auto w = call({"witness", data("ga.graph"), data("ga_insplit.spec")});
  REQUIRE(w.code == kExitPass);
  const auto wpath = put("ga.witness", w.out);
  const auto ok = call({"verify-sse", put("a.matrix", kA), put("b.matrix", kB), wpath});
  CHECK(ok.code == kExitPass);
  CHECK(ok.out.find("witness verifies") != std::string::npos);
}

TEST_CASE("verify-sse names the failing entry") {
  const auto bad = put("bad.witness", "roles B=RS,A=SR\nmatrix 3 2\n1 0\n1 0\n1 1\nmatrix 2 3\n1 0 1\n0 1 0\n");
  const auto r = call({"verify-sse", put("a.matrix", kA), put("b.matrix", kB), bad});
  CHECK(r.code == kExitFailed);
  CHECK(r.out.find("(3,3)") != std::string::npos);
}

TEST_CASE("search and invariants") {
  const auto found = call({"search-sse", put("a.matrix", kA), put("b.matrix", kB), "--bound", "2"});
  CHECK(found.code == kExitPass);
  CHECK(found.out.find("found") != std::string::npos);
  const auto rejected = call({"search-sse", put("two.matrix", "matrix 1 1\n2\n"), put("three.matrix", "matrix 1 1\n3\n")});
  CHECK(rejected.code == kExitFailed);
  CHECK(rejected.out.find("trace") != std::string::npos);
  CHECK(call({"invariants", put("a.matrix", kA), put("b.matrix", kB), "-n", "6"}).code == kExitPass);
}

TEST_CASE("conjugacy and correspondence checks") {
  const auto conj = call({"conjugacy-check", data("ga.graph"), data("ga_insplit.spec"), "-L", "4"});
  CHECK(conj.code == kExitPass);
  CHECK(conj.out.find("PASS L=4 source-paths 64 target-paths 48 image 48") != std::string::npos);
  CHECK(call({"conjugacy-check", data("ga.graph"), data("ga_outsplit.spec"), "-L", "3"}).code == kExitPass);
  CHECK(call({"corr-verify", data("ga.graph"), data("ga_insplit.spec")}).code == kExitPass);
  CHECK(call({"corr-verify", data("ga.graph"), data("ga_outsplit.spec"), "--out"}).code == kExitPass);
}

TEST_CASE("circle") {
  const auto r = call({"circle", "-m", "2", "-n", "2", "-a", "1", "-b", "2", "--grid", "24"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("NOTE") != std::string::npos);
  CHECK(call({"circle", "-m", "4", "-n", "6", "-a", "3", "-b", "2", "--outsplit"}).code == kExitPass);
  CHECK(call({"circle", "-m", "5", "-n", "2", "-a", "2", "-b", "2"}).code != kExitPass);
}

TEST_CASE("usage and input errors") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"--help"}).code == kExitPass);
  CHECK(call({"dual", (scratch() / "nope.graph").string()}).code == kExitUsage);
  const auto broken = put("broken.graph", "graph g\nvertex a\nedge e a b\n");
  const auto r = call({"dual", broken});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find(broken + ":3:") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"corr-verify", data("ga.graph"), data("ga_insplit.spec")};
  CHECK(call(args).out == call(args).out);
  const std::vector<std::string> conj{"conjugacy-check", data("ga.graph"), data("ga_insplit.spec")};
  CHECK(call(conj).out == call(conj).out);
}

TEST_CASE("dot") {
  const auto r = call({"dot", data("ga.graph")});
  CHECK(r.code == kExitPass);
  CHECK(r.out.rfind("digraph", 0) == 0);
}
