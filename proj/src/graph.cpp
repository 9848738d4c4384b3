#include "splitgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>

namespace splitgraph {

DirectedGraph::DirectedGraph(std::string name, std::vector<std::string> vertices,
                             const std::vector<EdgeRecord>& edges)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (!vertex_lookup_.emplace(vertices_[v], v).second) {
      throw GraphError("duplicate vertex id '" + vertices_[v] + "'");
    }
  }
  edges_.reserve(edges.size());
  for (const auto& rec : edges) {
    auto src = vertex_lookup_.find(rec.source);
    auto rng = vertex_lookup_.find(rec.range);
    if (src == vertex_lookup_.end()) {
      throw GraphError("edge '" + rec.id + "' has unknown source '" + rec.source + "'");
    }
    if (rng == vertex_lookup_.end()) {
      throw GraphError("edge '" + rec.id + "' has unknown range '" + rec.range + "'");
    }
    if (!edge_lookup_.emplace(rec.id, edges_.size()).second) {
      throw GraphError("duplicate edge id '" + rec.id + "'");
    }
    edges_.push_back(Edge{rec.id, src->second, rng->second});
  }
  in_edges_.resize(vertices_.size());
  out_edges_.resize(vertices_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    out_edges_[edges_[e].source].push_back(e);
    in_edges_[edges_[e].range].push_back(e);
  }
}

std::optional<VertexIndex> DirectedGraph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> DirectedGraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex DirectedGraph::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw GraphError("unknown vertex '" + std::string(id) + "' in graph '" + name_ + "'");
}

EdgeIndex DirectedGraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw GraphError("unknown edge '" + std::string(id) + "' in graph '" + name_ + "'");
}

bool DirectedGraph::is_regular() const {
  return std::none_of(in_edges_.begin(), in_edges_.end(), [](const auto& in) { return in.empty(); });
}

DirectedGraph DirectedGraph::renamed(std::string name) const {
  DirectedGraph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

IntMatrix adjacency_matrix(const DirectedGraph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) a(e.source, e.range) += 1;
  return a;
}

bool is_path(const DirectedGraph& g, const Path& p) {
  if (p.empty()) return false;
  for (EdgeIndex e : p)
    if (e >= g.edge_count()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (g.source(p[i]) != g.range(p[i + 1])) return false;
  return true;
}

std::vector<Path> paths(const DirectedGraph& g, std::size_t n) {
  std::vector<Path> out;
  if (n == 0) return out;
  Path current;
  current.reserve(n);
  std::function<void()> extend = [&]() {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    // The next edge must range at the source of the last one.
    const auto& candidates = g.in_edges(g.source(current.back()));
    for (EdgeIndex e : candidates) {
      current.push_back(e);
      extend();
      current.pop_back();
    }
  };
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    current.push_back(e);
    extend();
    current.pop_back();
  }
  return out;
}

std::string path_label(const DirectedGraph& g, const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '/';
    s += g.edge(p[i]).id;
  }
  return s;
}

DirectedGraph power_graph(const DirectedGraph& g, std::size_t n) {
  if (n == 0) throw GraphError("power_graph requires n >= 1");
  if (n == 1) return g;
  std::vector<DirectedGraph::EdgeRecord> edges;
  for (const Path& p : paths(g, n)) {
    edges.push_back({path_label(g, p), g.vertex(g.source(p.back())), g.vertex(g.range(p.front()))});
  }
  return DirectedGraph(g.name() + "^" + std::to_string(n),
                       std::vector<std::string>(g.vertices().begin(), g.vertices().end()), edges);
}

DirectedGraph dual_graph(const DirectedGraph& g) {
  std::vector<std::string> vertices;
  for (const auto& e : g.edges()) vertices.push_back(e.id);
  std::vector<DirectedGraph::EdgeRecord> edges;
  for (const Path& p : paths(g, 2)) {
    const std::string& outer = g.edge(p[0]).id;
    const std::string& inner = g.edge(p[1]).id;
    edges.push_back({"(" + outer + "," + inner + ")", inner, outer});
  }
  return DirectedGraph(g.name() + ".dual", std::move(vertices), edges);
}

DirectedGraph reversed_graph(const DirectedGraph& g) {
  std::vector<DirectedGraph::EdgeRecord> edges;
  for (const auto& e : g.edges()) edges.push_back({e.id, g.vertex(e.range), g.vertex(e.source)});
  return DirectedGraph(g.name() + ".rev", std::vector<std::string>(g.vertices().begin(), g.vertices().end()),
                       edges);
}

std::vector<VertexIndex> singular_vertices(const DirectedGraph& g) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.in_edges(v).empty()) out.push_back(v);
  return out;
}

namespace {

struct Signature {
  std::size_t out_degree;
  std::size_t in_degree;
  std::size_t loops;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const DirectedGraph& g, const IntMatrix& a) {
  std::vector<Signature> sig(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    sig[v] = {g.out_edges(v).size(), g.in_edges(v).size(), static_cast<std::size_t>(a(v, v))};
  }
  return sig;
}

}  // namespace

std::optional<GraphIsomorphism> are_isomorphic(const DirectedGraph& g, const DirectedGraph& h,
                                               std::size_t limit) {
  const std::size_t g_size = g.vertex_count() + g.edge_count();
  const std::size_t h_size = h.vertex_count() + h.edge_count();
  if (g_size > limit || h_size > limit) {
    throw TooLargeError("isomorphism search limited to |V|+|E| <= " + std::to_string(limit) + ", got " +
                        std::to_string(std::max(g_size, h_size)));
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;

  const IntMatrix ag = adjacency_matrix(g);
  const IntMatrix ah = adjacency_matrix(h);
  const auto sg = signatures(g, ag);
  const auto sh = signatures(h, ah);
  {
    auto a = sg, b = sh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  const std::size_t n = g.vertex_count();
  // Assign the most constrained vertices first: rarer signatures, then higher degree.
  std::map<Signature, std::size_t> frequency;
  for (const auto& s : sg) ++frequency[s];
  std::vector<VertexIndex> order(n);
  for (VertexIndex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexIndex x, VertexIndex y) {
    if (frequency[sg[x]] != frequency[sg[y]]) return frequency[sg[x]] < frequency[sg[y]];
    return sg[x].out_degree + sg[x].in_degree > sg[y].out_degree + sg[y].in_degree;
  });

  std::vector<VertexIndex> mu(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const VertexIndex v = order[depth];
    for (VertexIndex w = 0; w < n; ++w) {
      if (used[w] || sg[v] != sh[w]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const VertexIndex u = order[d];
        consistent = ag(v, u) == ah(w, mu[u]) && ag(u, v) == ah(mu[u], w);
      }
      if (!consistent) continue;
      mu[v] = w;
      used[w] = true;
      if (assign(depth + 1)) return true;
      used[w] = false;
      mu[v] = n;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;

  // Parallel edges between matched endpoints are interchangeable; pair them in order.
  std::map<std::pair<VertexIndex, VertexIndex>, std::vector<EdgeIndex>> h_bucket;
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) h_bucket[{h.source(e), h.range(e)}].push_back(e);
  std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> taken;
  GraphIsomorphism iso{mu, std::vector<EdgeIndex>(g.edge_count())};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const std::pair key{mu[g.source(e)], mu[g.range(e)]};
    iso.edge_map[e] = h_bucket.at(key).at(taken[key]++);
  }
  return iso;
}

bool is_isomorphism(const DirectedGraph& g, const DirectedGraph& h, const GraphIsomorphism& iso) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (iso.vertex_map.size() != g.vertex_count() || iso.edge_map.size() != g.edge_count()) return false;
  std::vector<bool> hit_v(h.vertex_count(), false), hit_e(h.edge_count(), false);
  for (VertexIndex w : iso.vertex_map) {
    if (w >= h.vertex_count() || hit_v[w]) return false;
    hit_v[w] = true;
  }
  for (EdgeIndex f : iso.edge_map) {
    if (f >= h.edge_count() || hit_e[f]) return false;
    hit_e[f] = true;
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const EdgeIndex f = iso.edge_map[e];
    if (iso.vertex_map[g.source(e)] != h.source(f)) return false;
    if (iso.vertex_map[g.range(e)] != h.range(f)) return false;
  }
  return true;
}

}  // namespace splitgraph
