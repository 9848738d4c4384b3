#include "corpus.hpp"
#include "doctest.h"
#include "splitgraph/correspondence.hpp"

using namespace splitgraph;

namespace {

bool same(const Vector& a, const Vector& b) { return std::equal(a.begin(), a.end(), b.begin(), b.end()); }

Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

std::vector<std::string> names(const DirectedGraph& g, const std::vector<std::size_t>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.vertex(v));
  return out;
}

InSplitSpec ga_in_split(const DirectedGraph& g) {
  return in_split_from_partition(g, g.vertex_index("w"), {{g.edge_index("e"), g.edge_index("h")}, {g.edge_index("g")}});
}

OutSplitSpec ga_out_split(const DirectedGraph& g) {
  return out_split_from_partition(g, g.vertex_index("w"), {{g.edge_index("e")}, {g.edge_index("f")}});
}

}  // namespace

TEST_CASE("graph correspondence operations") {
  const auto g = corpus::graph_a();
  const auto x = graph_correspondence(g);
  CHECK(x.dimension() == 4);
  // (x|y)(v) sums over edges with source v: e, f from w; g, h from v.
  CHECK(same(x.inner(vec({1, 2, 3, 4}), vec({1, 1, 1, 1})), vec({3, 7})));
  CHECK(same(x.right_action(vec({1, 1, 1, 1}), vec({2, 5})), vec({2, 2, 5, 5})));
  // Left action through the range: e, g, h end at w; f ends at v.
  CHECK(same(x.left_action(vec({2, 5}), vec({1, 1, 1, 1})), vec({2, 5, 2, 2})));
  const auto t = x.theta(x.basis_vector(0), x.basis_vector(1));
  CHECK(t(0, 1) == 1);
  CHECK(t(0, 2) == 0);
}

TEST_CASE("frames") {
  const auto g = corpus::graph_a();
  const auto x = graph_correspondence(g);
  std::vector<Vector> standard;
  for (std::size_t b = 0; b < x.dimension(); ++b) standard.push_back(x.basis_vector(b));
  CHECK(verify_frame(x, standard));

  auto halved = standard;
  for (auto& v : halved)
    for (auto& c : v) c /= 2;
  CHECK_FALSE(verify_frame(x, halved));
  standard.pop_back();
  CHECK_FALSE(verify_frame(x, standard));

  const auto two = graph_correspondence(corpus::essential_graphs()[2]);  // two loops
  Vector u{Rational(3, 5), Rational(4, 5)}, w{Rational(4, 5), Rational(-3, 5)};
  CHECK(verify_frame(two, {u, w}));
  CHECK_FALSE(verify_frame(two, {u, u}));
}

TEST_CASE("covariance ideals") {
  const auto g = corpus::graph_a();
  CHECK(covariance_ideal(graph_correspondence(g)).size() == 2);
  const auto arrow = corpus::boundary_graphs()[2];
  CHECK(names(arrow, covariance_ideal(graph_correspondence(arrow))) == std::vector<std::string>{"v"});
  CHECK(covariance_ideal(graph_correspondence(corpus::boundary_graphs()[3])).empty());
  const auto id = identity_correspondence({"p", "q", "r"});
  CHECK(covariance_ideal(id).size() == 3);
}

TEST_CASE("tensor products") {
  const auto g = corpus::graph_a();
  const auto x = graph_correspondence(g);
  const auto xx = tensor(x, x);
  CHECK(xx.module.dimension() == paths(g, 2).size());
  const auto& e = g.edge_index("e");
  const auto& gg = g.edge_index("g");
  bool labelled = false;
  for (const auto& b : xx.module.basis) labelled = labelled || b == "(e,g)";
  CHECK(labelled);
  const auto ef = tensor_element(xx, x.basis_vector(e), x.basis_vector(g.edge_index("f")));
  for (const auto& c : ef) CHECK(c == 0);  // s(e) = w but f ends at v
  const auto eg = tensor_element(xx, x.basis_vector(e), x.basis_vector(gg));
  Rational total = 0;
  for (const auto& c : eg) total += c;
  CHECK(total == 1);

  const auto xi = tensor(x, identity_correspondence({"w", "v"}));
  CHECK(xi.module.dimension() == 4);
}

TEST_CASE("morphism checks") {
  const auto g = corpus::graph_a();
  const auto report = insplit_correspondence(g, ga_in_split(g));
  CHECK(check_morphism(report.x, report.module, report.structural).empty());
  CHECK(check_isomorphism(report.module, report.split, report.iso).empty());
  auto broken = report.iso;
  broken.beta(0, 0) += 1;
  CHECK_FALSE(check_morphism(report.module, report.split, broken).empty());
  auto bad_alpha = report.iso;
  bad_alpha.alpha[0] = (bad_alpha.alpha[0] + 1) % report.split.left_points.size();
  CHECK_FALSE(check_morphism(report.module, report.split, bad_alpha).empty());
}

TEST_CASE("in-split correspondence of the two-vertex example") {
  const auto g = corpus::graph_a();
  const auto report = insplit_correspondence(g, ga_in_split(g));
  CHECK(report.passed());
  CHECK(report.module.dimension() == 6);
  CHECK(report.split.dimension() == 6);
  CHECK(report.j_phi.size() == 2);
  CHECK(report.j_psi.size() == 3);
  CHECK(report.j_module.size() == 3);
  CHECK(report.to_string().find("PASS") != std::string::npos);
}

TEST_CASE("in-split correspondences over the corpus") {
  for (const auto& g : corpus::essential_graphs()) {
    for (const auto& [label, spec] : corpus::in_splits(g)) {
      CAPTURE(g.name());
      CAPTURE(label);
      const auto report = insplit_correspondence(g, spec);
      CHECK(report.passed());
      CHECK(report.module.dimension() == apply_in_split(g, spec).edge_count());
    }
  }
  for (const auto& g : corpus::boundary_graphs()) {
    CAPTURE(g.name());
    CHECK(insplit_correspondence(g, identity_in_split(g)).passed());
  }
  const auto g = corpus::graph_a();
  CHECK(insplit_correspondence(g, complete_in_split(g)).module.dimension() == 8);
}

TEST_CASE("decomposing functions on the new vertices") {
  const auto g = corpus::graph_a();
  const auto spec = ga_in_split(g);  // w@1, w@2, v@1
  const auto varying = decompose_b(g, spec, vec({1, 2, 3}));
  CHECK(same(varying.a, vec({0, 3})));
  CHECK(same(varying.k, vec({1, 2, 0})));
  const auto constant = decompose_b(g, spec, vec({5, 5, 3}));
  CHECK(same(constant.a, vec({5, 3})));
  CHECK(same(constant.k, vec({0, 0, 0})));

  const auto tail = corpus::boundary_graphs()[0];  // source s
  const auto id = identity_in_split(tail);
  const auto d = decompose_b(tail, id, vec({7, 4}));
  CHECK(same(d.a, vec({7, 4})));
  CHECK(same(d.k, vec({0, 0})));
}

TEST_CASE("conditional expectation") {
  const auto g = corpus::graph_a();
  CHECK(same(conditional_expectation(g, ga_out_split(g), vec({1, 2, 3})), vec({3, 3})));
  CHECK(same(conditional_expectation(g, identity_out_split(g), vec({4, 9})), vec({4, 9})));
}

TEST_CASE("out-split correspondences") {
  const auto g = corpus::graph_a();
  const auto report = outsplit_correspondence(g, ga_out_split(g));
  CHECK(report.passed());
  CHECK(report.split.dimension() == apply_out_split(g, ga_out_split(g)).edge_count());
  CHECK_FALSE(report.lambda_left_inverse);
  CHECK(outsplit_correspondence(g, identity_out_split(g)).lambda_left_inverse);
  for (const auto& h : corpus::essential_graphs()) {
    for (const auto& [label, spec] : corpus::out_splits(h)) {
      CAPTURE(h.name());
      CAPTURE(label);
      CHECK(outsplit_correspondence(h, spec).passed());
    }
  }
}

TEST_CASE("path projections stay diagonal") {
  const auto g = corpus::graph_a();
  const auto spec = ga_in_split(g);
  const auto split = apply_in_split(g, spec);
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto report = diagonal_level_check(g, spec, k);
    CAPTURE(k);
    CHECK(report.passed());
    CHECK(report.level == k);
    CHECK(report.dimension == paths(split, k).size());
  }
}
