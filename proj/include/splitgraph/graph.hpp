#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "splitgraph/numeric.hpp"

namespace splitgraph {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  std::string id;
  VertexIndex source;
  VertexIndex range;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edges are composed right to left: a path e1 e2 ... en has s(e_i) = r(e_{i+1}).
using Path = std::vector<EdgeIndex>;

/// Finite directed multigraph with explicitly ordered vertices and edges.
///
/// The vertex order fixes matrix indexing: adjacency(i, j) counts edges with
/// source vertex i and range vertex j. Values are immutable once built.
class DirectedGraph {
 public:
  struct EdgeRecord {
    std::string id;
    std::string source;
    std::string range;
  };

  DirectedGraph() = default;

  // Throws GraphError on duplicate ids or dangling endpoints.
  DirectedGraph(std::string name, std::vector<std::string> vertices, const std::vector<EdgeRecord>& edges);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const std::string> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  const std::string& vertex(VertexIndex v) const { return vertices_.at(v); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  VertexIndex source(EdgeIndex e) const { return edges_[e].source; }
  VertexIndex range(EdgeIndex e) const { return edges_[e].range; }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  VertexIndex vertex_index(std::string_view id) const;  // throws GraphError
  EdgeIndex edge_index(std::string_view id) const;      // throws GraphError

  // Edge indices in edge order.
  const std::vector<EdgeIndex>& in_edges(VertexIndex v) const { return in_edges_.at(v); }
  const std::vector<EdgeIndex>& out_edges(VertexIndex v) const { return out_edges_.at(v); }

  // No vertex is a source, i.e. every vertex receives an edge.
  bool is_regular() const;

  // Same graph with a different name.
  DirectedGraph renamed(std::string name) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.name_ == b.name_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  std::vector<std::vector<EdgeIndex>> in_edges_;
  std::vector<std::vector<EdgeIndex>> out_edges_;
};

// A[i][j] = #{e : s(e) = v_i, r(e) = v_j}.
IntMatrix adjacency_matrix(const DirectedGraph& g);

// All paths of length n, lexicographic in edge order.
std::vector<Path> paths(const DirectedGraph& g, std::size_t n);

// Composable: s(p[i]) == r(p[i+1]) throughout.
bool is_path(const DirectedGraph& g, const Path& p);

std::string path_label(const DirectedGraph& g, const Path& p);

// Same vertices; edges are the paths of length n with r = r(e1), s = s(en).
// Edge ids of paths are joined with '/'; n = 1 returns g unchanged.
DirectedGraph power_graph(const DirectedGraph& g, std::size_t n);

// Vertices are edges; edges are composable pairs (e', e) with s(e') = r(e),
// ranging to e' and sourced at e.
DirectedGraph dual_graph(const DirectedGraph& g);

// The same vertices with every edge turned around.
DirectedGraph reversed_graph(const DirectedGraph& g);

// Vertices receiving no edge.
std::vector<VertexIndex> singular_vertices(const DirectedGraph& g);

struct GraphIsomorphism {
  std::vector<VertexIndex> vertex_map;  // g vertex -> h vertex
  std::vector<EdgeIndex> edge_map;      // g edge -> h edge
};

inline constexpr std::size_t kDefaultIsomorphismLimit = 160;

// Backtracking search for (mu, nu) with mu(s(e)) = s(nu(e)) and mu(r(e)) = r(nu(e)).
// Throws TooLargeError when |V| + |E| of either graph exceeds `limit`.
std::optional<GraphIsomorphism> are_isomorphic(const DirectedGraph& g, const DirectedGraph& h,
                                               std::size_t limit = kDefaultIsomorphismLimit);

// Independent edge-by-edge check of a claimed isomorphism.
bool is_isomorphism(const DirectedGraph& g, const DirectedGraph& h, const GraphIsomorphism& iso);

}  // namespace splitgraph
