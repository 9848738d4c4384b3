#include "corpus.hpp"

namespace corpus {

using namespace splitgraph;

DirectedGraph make_graph(const std::string& name, const std::vector<std::string>& vertices,
                         const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  std::vector<DirectedGraph::EdgeRecord> records;
  for (const auto& [id, src, rng] : edges) records.push_back({id, src, rng});
  return DirectedGraph(name, vertices, records);
}

DirectedGraph graph_a() {
  return make_graph("G_A", {"w", "v"}, {{"e", "w", "w"}, {"f", "w", "v"}, {"g", "v", "w"}, {"h", "v", "w"}});
}

std::vector<DirectedGraph> essential_graphs() {
  std::vector<DirectedGraph> out;
  out.push_back(graph_a());
  out.push_back(make_graph("loop", {"x"}, {{"l", "x", "x"}}));
  out.push_back(make_graph("two_loops", {"x"}, {{"a", "x", "x"}, {"b", "x", "x"}}));
  out.push_back(make_graph("golden", {"a", "b"}, {{"x", "a", "a"}, {"y", "a", "b"}, {"z", "b", "a"}}));
  out.push_back(make_graph("tri_chord", {"a", "b", "c"},
                           {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}, {"aa", "a", "a"}}));
  out.push_back(make_graph("double_back", {"u", "v"},
                           {{"p", "u", "v"}, {"q", "u", "v"}, {"r", "v", "u"}, {"s", "v", "v"}}));
  out.push_back(make_graph("square_double", {"c0", "c1", "c2", "c3"},
                           {{"s01", "c0", "c1"}, {"s12", "c1", "c2"}, {"s23", "c2", "c3"}, {"s30", "c3", "c0"},
                            {"t30", "c3", "c0"}}));
  out.push_back(make_graph("ring5", {"v0", "v1", "v2", "v3", "v4"},
                           {{"r0", "v0", "v1"}, {"r1", "v1", "v2"}, {"r2", "v2", "v3"}, {"r3", "v3", "v4"},
                            {"r4", "v4", "v0"}, {"l0", "v0", "v0"}, {"l2", "v2", "v2"}}));
  out.push_back(make_graph("ring8", {"c0", "c1", "c2", "c3", "c4", "c5", "c6", "c7"},
                           {{"k0", "c0", "c1"}, {"k1", "c1", "c2"}, {"k2", "c2", "c3"}, {"k3", "c3", "c4"},
                            {"k4", "c4", "c5"}, {"k5", "c5", "c6"}, {"k6", "c6", "c7"}, {"k7", "c7", "c0"},
                            {"z0", "c0", "c0"}}));
  out.push_back(make_graph("twin_triangles", {"a1", "a2", "a3", "b1", "b2", "b3"},
                           {{"a12", "a1", "a2"}, {"a23", "a2", "a3"}, {"a31", "a3", "a1"}, {"b12", "b1", "b2"},
                            {"b23", "b2", "b3"}, {"b31", "b3", "b1"}, {"ab", "a1", "b1"}, {"ba", "b1", "a1"}}));
  out.push_back(dual_graph(graph_a()));
  out.push_back(make_graph("bowtie", {"x", "y", "z"},
                           {{"xy", "x", "y"}, {"yx", "y", "x"}, {"xz", "x", "z"}, {"zx", "z", "x"}, {"yy", "y", "y"}}));
  return out;
}

std::vector<DirectedGraph> boundary_graphs() {
  std::vector<DirectedGraph> out;
  out.push_back(make_graph("tail", {"s", "a"}, {{"t", "s", "a"}, {"aa", "a", "a"}}));
  out.push_back(make_graph("drain", {"a", "z"}, {{"aa", "a", "a"}, {"az", "a", "z"}, {"ab", "a", "a"}}));
  out.push_back(make_graph("arrow", {"w", "v"}, {{"f", "w", "v"}}));
  out.push_back(make_graph("edgeless", {"p", "q"}, {}));
  out.push_back(make_graph("fan_in", {"s1", "s2", "c"}, {{"x", "s1", "c"}, {"y", "s2", "c"}, {"z", "c", "c"}}));
  return out;
}

namespace {

template <class Spec>
Spec simultaneous(const DirectedGraph& g, bool by_range) {
  Spec spec;
  std::vector<std::size_t> first_copy(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto& edges = by_range ? g.in_edges(v) : g.out_edges(v);
    first_copy[v] = spec.new_vertices.size();
    const std::size_t copies = edges.size() >= 2 ? 2 : 1;
    for (std::size_t i = 1; i <= copies; ++i) {
      spec.new_vertices.push_back(g.vertex(v) + "@" + std::to_string(i));
      spec.alpha.push_back(v);
    }
  }
  spec.psi.resize(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const VertexIndex v = by_range ? g.range(e) : g.source(e);
    const auto& edges = by_range ? g.in_edges(v) : g.out_edges(v);
    spec.psi[e] = first_copy[v] + (edges.size() >= 2 && e != edges.front() ? 1 : 0);
  }
  return spec;
}

EdgePartition first_and_rest(const std::vector<EdgeIndex>& edges) {
  return {{edges.front()}, std::vector<EdgeIndex>(edges.begin() + 1, edges.end())};
}

EdgePartition finest(const std::vector<EdgeIndex>& edges) {
  EdgePartition p;
  for (EdgeIndex e : edges) p.push_back({e});
  return p;
}

}  // namespace

std::vector<NamedInSplit> in_splits(const DirectedGraph& g) {
  std::vector<NamedInSplit> out;
  out.push_back({"identity", identity_in_split(g)});
  if (g.is_regular()) out.push_back({"complete", complete_in_split(g)});
  for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
    const auto& in = g.in_edges(w);
    if (in.size() >= 2) out.push_back({"two-class at " + g.vertex(w), in_split_from_partition(g, w, first_and_rest(in))});
    if (in.size() >= 3) out.push_back({"finest at " + g.vertex(w), in_split_from_partition(g, w, finest(in))});
  }
  out.push_back({"simultaneous", simultaneous<InSplitSpec>(g, true)});
  return out;
}

std::vector<NamedOutSplit> out_splits(const DirectedGraph& g) {
  std::vector<NamedOutSplit> out;
  out.push_back({"identity", identity_out_split(g)});
  out.push_back({"complete", complete_out_split(g)});
  for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
    const auto& o = g.out_edges(w);
    if (o.size() >= 2) out.push_back({"two-class at " + g.vertex(w), out_split_from_partition(g, w, first_and_rest(o))});
    if (o.size() >= 3) out.push_back({"finest at " + g.vertex(w), out_split_from_partition(g, w, finest(o))});
  }
  out.push_back({"simultaneous", simultaneous<OutSplitSpec>(g, false)});
  return out;
}

}  // namespace corpus
