#include "splitgraph/moves.hpp"

#include <map>
#include <set>
#include <sstream>

namespace splitgraph {

bool ValidationReport::has(const std::string& condition) const {
  for (const auto& v : violations)
    if (v.condition == condition) return true;
  return false;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid\n";
  std::ostringstream os;
  for (const auto& v : violations) os << "violation " << v.condition << ": " << v.detail << '\n';
  return os.str();
}

namespace {

std::string split_name(const std::string& base, std::size_t index) {
  return base + "@" + std::to_string(index);
}

// Checks that `partition` partitions `expected` exactly; returns the class of
// each edge in `expected`.
std::map<EdgeIndex, std::size_t> check_partition(const DirectedGraph& g, const std::vector<EdgeIndex>& expected,
                                                  const EdgePartition& partition, bool allow_empty,
                                                  const std::string& what) {
  std::set<EdgeIndex> wanted(expected.begin(), expected.end());
  std::map<EdgeIndex, std::size_t> klass;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty() && !allow_empty) {
      throw SpecError("partition class " + std::to_string(i + 1) + " is empty");
    }
    for (EdgeIndex e : partition[i]) {
      if (e >= g.edge_count()) throw SpecError("partition names an unknown edge index");
      if (!wanted.count(e)) {
        throw SpecError("edge '" + g.edge(e).id + "' is not in " + what);
      }
      if (!klass.emplace(e, i).second) {
        throw SpecError("edge '" + g.edge(e).id + "' appears in more than one class");
      }
    }
  }
  for (EdgeIndex e : expected) {
    if (!klass.count(e)) throw SpecError("edge '" + g.edge(e).id + "' of " + what + " is not covered");
  }
  return klass;
}

// Index of each original vertex's first copy, with w expanded into `copies`.
struct SplitVertices {
  std::vector<std::string> names;
  std::vector<VertexIndex> alpha;
  std::vector<std::size_t> first_copy;
};

SplitVertices split_vertices(const DirectedGraph& g, VertexIndex w, std::size_t copies) {
  SplitVertices out;
  out.first_copy.resize(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out.first_copy[v] = out.names.size();
    const std::size_t k = v == w ? copies : 1;
    for (std::size_t i = 1; i <= k; ++i) {
      out.names.push_back(split_name(g.vertex(v), i));
      out.alpha.push_back(v);
    }
  }
  return out;
}

void check_sizes(const DirectedGraph& g, const std::vector<std::string>& names, const std::vector<VertexIndex>& alpha,
                 const std::vector<std::size_t>& psi, ValidationReport& report) {
  if (alpha.size() != names.size()) {
    report.violations.push_back({"alpha-domain", "alpha has " + std::to_string(alpha.size()) + " entries for " +
                                                     std::to_string(names.size()) + " new vertices"});
  }
  if (psi.size() != g.edge_count()) {
    report.violations.push_back({"psi-domain", "psi has " + std::to_string(psi.size()) + " entries for " +
                                                   std::to_string(g.edge_count()) + " edges"});
  }
  for (std::size_t y = 0; y < alpha.size(); ++y) {
    if (alpha[y] >= g.vertex_count()) {
      report.violations.push_back({"alpha-codomain", "alpha(" + names.at(y) + ") is not a vertex"});
    }
  }
  for (std::size_t e = 0; e < psi.size() && e < g.edge_count(); ++e) {
    if (psi[e] >= names.size()) {
      report.violations.push_back({"psi-codomain", "psi(" + g.edge(e).id + ") is not a new vertex"});
    }
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) report.violations.push_back({"new-vertex-ids", "duplicate new vertex '" + n + "'"});
  }
}

void check_alpha_surjective(const DirectedGraph& g, const std::vector<VertexIndex>& alpha, ValidationReport& report) {
  std::vector<bool> hit(g.vertex_count(), false);
  for (VertexIndex v : alpha) hit[v] = true;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!hit[v]) report.violations.push_back({"alpha-surjective", "vertex '" + g.vertex(v) + "' has no preimage"});
  }
}

}  // namespace

InSplitSpec in_split_from_partition(const DirectedGraph& g, VertexIndex w, const EdgePartition& partition) {
  if (w >= g.vertex_count()) throw SpecError("split vertex out of range");
  if (g.in_edges(w).empty()) throw SpecError("vertex '" + g.vertex(w) + "' is a source and cannot be in-split");
  if (partition.empty()) throw SpecError("partition has no classes");
  const auto klass = check_partition(g, g.in_edges(w), partition, false, "r^-1(" + g.vertex(w) + ")");

  const auto verts = split_vertices(g, w, partition.size());
  InSplitSpec spec{verts.names, verts.alpha, std::vector<std::size_t>(g.edge_count())};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const VertexIndex r = g.range(e);
    spec.psi[e] = verts.first_copy[r] + (r == w ? klass.at(e) : 0);
  }
  return spec;
}

InSplitSpec identity_in_split(const DirectedGraph& g) {
  InSplitSpec spec;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    spec.new_vertices.push_back(split_name(g.vertex(v), 1));
    spec.alpha.push_back(v);
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) spec.psi.push_back(g.range(e));
  return spec;
}

InSplitSpec complete_in_split(const DirectedGraph& g) {
  if (!g.is_regular()) {
    throw SpecError("complete in-split requires a graph without sources; '" +
                    g.vertex(singular_vertices(g).front()) + "' receives no edge");
  }
  InSplitSpec spec;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    spec.new_vertices.push_back(g.edge(e).id);
    spec.alpha.push_back(g.range(e));
    spec.psi.push_back(e);
  }
  return spec;
}

ValidationReport validate_in_split(const DirectedGraph& g, const InSplitSpec& spec) {
  ValidationReport report;
  check_sizes(g, spec.new_vertices, spec.alpha, spec.psi, report);
  if (!report.ok()) return report;
  check_alpha_surjective(g, spec.alpha, report);

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (spec.alpha[spec.psi[e]] != g.range(e)) {
      report.violations.push_back({"alpha-psi-range", "alpha(psi(" + g.edge(e).id + ")) = '" +
                                                          g.vertex(spec.alpha[spec.psi[e]]) + "' but r(" +
                                                          g.edge(e).id + ") = '" + g.vertex(g.range(e)) + "'"});
    }
  }

  // alpha must restrict to a bijection from Y \ psi(E1) onto E0 \ r(E1).
  std::vector<bool> psi_hit(spec.new_vertices.size(), false);
  for (std::size_t y : spec.psi) psi_hit[y] = true;
  std::vector<std::size_t> preimages(g.vertex_count(), 0);
  for (std::size_t y = 0; y < spec.new_vertices.size(); ++y) {
    if (psi_hit[y]) continue;
    const VertexIndex v = spec.alpha[y];
    if (!g.in_edges(v).empty()) {
      report.violations.push_back({"singular-bijection", "new vertex '" + spec.new_vertices[y] +
                                                             "' receives nothing but lies over non-source '" +
                                                             g.vertex(v) + "'"});
    }
    ++preimages[v];
  }
  for (VertexIndex v : singular_vertices(g)) {
    if (preimages[v] != 1) {
      report.violations.push_back({"singular-bijection", "source '" + g.vertex(v) + "' has " +
                                                             std::to_string(preimages[v]) +
                                                             " singular preimages, expected 1"});
    }
  }
  return report;
}

std::vector<std::pair<EdgeIndex, std::size_t>> in_split_edge_pairs(const DirectedGraph& g, const InSplitSpec& spec) {
  std::vector<std::vector<std::size_t>> fibre(g.vertex_count());
  for (std::size_t y = 0; y < spec.alpha.size(); ++y) fibre[spec.alpha[y]].push_back(y);
  std::vector<std::pair<EdgeIndex, std::size_t>> pairs;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    for (std::size_t y : fibre[g.source(e)]) pairs.emplace_back(e, y);
  return pairs;
}

DirectedGraph apply_in_split(const DirectedGraph& g, const InSplitSpec& spec) {
  const auto report = validate_in_split(g, spec);
  if (!report.ok()) throw SpecError("invalid in-split: " + report.violations.front().condition + ": " +
                                    report.violations.front().detail);
  std::vector<DirectedGraph::EdgeRecord> edges;
  for (const auto& [e, y] : in_split_edge_pairs(g, spec)) {
    edges.push_back({"(" + g.edge(e).id + "," + spec.new_vertices[y] + ")", spec.new_vertices[y],
                     spec.new_vertices[spec.psi[e]]});
  }
  return DirectedGraph(g.name() + ".in", spec.new_vertices, edges);
}

InSplitSpec diamond_spec(const DirectedGraph& g, const InSplitSpec& spec) {
  if (!g.is_regular()) throw SpecError("diamond construction requires a graph without sources");
  const auto pairs = in_split_edge_pairs(g, spec);
  if (const auto report = validate_in_split(g, spec); !report.ok()) throw SpecError("invalid in-split");
  InSplitSpec out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    out.new_vertices.push_back(g.edge(e).id);
    out.alpha.push_back(spec.psi[e]);
  }
  for (const auto& pair : pairs) out.psi.push_back(pair.first);
  return out;
}

ComposedInSplit compose_in_splits(const DirectedGraph& g, const std::vector<InSplitSpec>& specs) {
  if (specs.empty()) throw SpecError("compose_in_splits needs at least one in-split");
  if (!g.is_regular()) throw SpecError("compose_in_splits requires a graph without sources");
  const std::size_t n = specs.size();

  // Stage graphs and, for each stage, the lookup (edge, new vertex) -> split edge.
  std::vector<DirectedGraph> stage{g};
  std::vector<std::map<std::pair<EdgeIndex, std::size_t>, EdgeIndex>> split_edge(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto report = validate_in_split(stage[k], specs[k]);
    if (!report.ok()) {
      throw SpecError("stage " + std::to_string(k + 1) + " is not an in-split of the previous stage: " +
                      report.violations.front().detail);
    }
    const auto pairs = in_split_edge_pairs(stage[k], specs[k]);
    for (EdgeIndex i = 0; i < pairs.size(); ++i) split_edge[k][pairs[i]] = i;
    stage.push_back(apply_in_split(stage[k], specs[k]));
  }

  ComposedInSplit out{n, InSplitSpec{}};
  out.combined.new_vertices = specs.back().new_vertices;
  for (std::size_t y = 0; y < specs.back().alpha.size(); ++y) {
    VertexIndex v = y;
    for (std::size_t k = n; k-- > 0;) v = specs[k].alpha[v];
    out.combined.alpha.push_back(v);
  }
  // Each stage's sliding code maps a path e1..ep to ((e1, psi(e2)), ..., (e_{p-1}, psi(e_p))).
  for (const Path& p : paths(g, n)) {
    Path current = p;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      Path next;
      for (std::size_t i = 0; i + 1 < current.size(); ++i) {
        next.push_back(split_edge[k].at({current[i], specs[k].psi[current[i + 1]]}));
      }
      current = std::move(next);
    }
    out.combined.psi.push_back(specs[n - 1].psi[current.front()]);
  }
  return out;
}

OutSplitSpec out_split_from_partition(const DirectedGraph& g, VertexIndex w, const EdgePartition& partition,
                                      bool allow_empty) {
  if (w >= g.vertex_count()) throw SpecError("split vertex out of range");
  if (g.out_edges(w).empty()) throw SpecError("vertex '" + g.vertex(w) + "' emits no edges and cannot be out-split");
  if (partition.empty()) throw SpecError("partition has no classes");
  const auto klass = check_partition(g, g.out_edges(w), partition, allow_empty, "s^-1(" + g.vertex(w) + ")");

  const auto verts = split_vertices(g, w, partition.size());
  OutSplitSpec spec{verts.names, verts.alpha, std::vector<std::size_t>(g.edge_count())};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const VertexIndex s = g.source(e);
    spec.psi[e] = verts.first_copy[s] + (s == w ? klass.at(e) : 0);
  }
  return spec;
}

OutSplitSpec identity_out_split(const DirectedGraph& g) {
  OutSplitSpec spec;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    spec.new_vertices.push_back(split_name(g.vertex(v), 1));
    spec.alpha.push_back(v);
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) spec.psi.push_back(g.source(e));
  return spec;
}

OutSplitSpec complete_out_split(const DirectedGraph& g) {
  OutSplitSpec spec;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    spec.new_vertices.push_back(g.edge(e).id);
    spec.alpha.push_back(g.source(e));
    spec.psi.push_back(e);
  }
  return spec;
}

ValidationReport validate_out_split(const DirectedGraph& g, const OutSplitSpec& spec, bool allow_unused_vertices) {
  ValidationReport report;
  check_sizes(g, spec.new_vertices, spec.alpha, spec.psi, report);
  if (!report.ok()) return report;
  check_alpha_surjective(g, spec.alpha, report);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (spec.alpha[spec.psi[e]] != g.source(e)) {
      report.violations.push_back({"alpha-psi-source", "alpha(psi(" + g.edge(e).id + ")) = '" +
                                                           g.vertex(spec.alpha[spec.psi[e]]) + "' but s(" +
                                                           g.edge(e).id + ") = '" + g.vertex(g.source(e)) + "'"});
    }
  }
  if (!allow_unused_vertices) {
    std::vector<bool> hit(spec.new_vertices.size(), false);
    for (std::size_t y : spec.psi) hit[y] = true;
    for (std::size_t y = 0; y < hit.size(); ++y) {
      if (!hit[y]) {
        report.violations.push_back({"psi-surjective", "new vertex '" + spec.new_vertices[y] + "' emits no edge"});
      }
    }
  }
  return report;
}

std::vector<std::pair<std::size_t, EdgeIndex>> out_split_edge_pairs(const DirectedGraph& g, const OutSplitSpec& spec) {
  std::vector<std::pair<std::size_t, EdgeIndex>> pairs;
  for (std::size_t y = 0; y < spec.alpha.size(); ++y)
    for (EdgeIndex e : g.in_edges(spec.alpha[y])) pairs.emplace_back(y, e);
  return pairs;
}

DirectedGraph apply_out_split(const DirectedGraph& g, const OutSplitSpec& spec, bool allow_unused_vertices) {
  const auto report = validate_out_split(g, spec, allow_unused_vertices);
  if (!report.ok()) throw SpecError("invalid out-split: " + report.violations.front().condition + ": " +
                                    report.violations.front().detail);
  std::vector<DirectedGraph::EdgeRecord> edges;
  for (const auto& [y, e] : out_split_edge_pairs(g, spec)) {
    edges.push_back({"(" + spec.new_vertices[y] + "," + g.edge(e).id + ")", spec.new_vertices[spec.psi[e]],
                     spec.new_vertices[y]});
  }
  return DirectedGraph(g.name() + ".out", spec.new_vertices, edges);
}

}  // namespace splitgraph
