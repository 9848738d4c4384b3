#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "splitgraph/graph.hpp"

namespace splitgraph {

/// General in-split data (alpha, Y, psi) factorising the range map r = alpha o psi.
///
/// Indices refer to the graph the spec was built for: `alpha[y]` is a vertex of
/// that graph and `psi[e]` an index into `new_vertices`.
struct InSplitSpec {
  std::vector<std::string> new_vertices;
  std::vector<VertexIndex> alpha;
  std::vector<std::size_t> psi;

  friend bool operator==(const InSplitSpec&, const InSplitSpec&) = default;
};

/// General out-split data (alpha, Y, psi) factorising the source map s = alpha o psi.
struct OutSplitSpec {
  std::vector<std::string> new_vertices;
  std::vector<VertexIndex> alpha;
  std::vector<std::size_t> psi;

  friend bool operator==(const OutSplitSpec&, const OutSplitSpec&) = default;
};

struct Violation {
  std::string condition;
  std::string detail;
};

// Empty means valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& condition) const;
  std::string to_string() const;
};

using EdgePartition = std::vector<std::vector<EdgeIndex>>;

// Classical single-vertex in-split: new vertices v@1 for v != w and w@1..w@n
// in place of w. Throws SpecError if w is a source or the classes do not
// partition r^-1(w).
InSplitSpec in_split_from_partition(const DirectedGraph& g, VertexIndex w, const EdgePartition& partition);

// (Id, E0, r).
InSplitSpec identity_in_split(const DirectedGraph& g);

// (r, E1, Id); requires g without sources.
InSplitSpec complete_in_split(const DirectedGraph& g);

ValidationReport validate_in_split(const DirectedGraph& g, const InSplitSpec& spec);

// Edge set of the split graph as pairs (e, y) with s(e) = alpha(y), in the
// order used by apply_in_split.
std::vector<std::pair<EdgeIndex, std::size_t>> in_split_edge_pairs(const DirectedGraph& g,
                                                                   const InSplitSpec& spec);

// E1_I = E1 x_{s,alpha} Y with r_I(e, y) = psi(e), s_I(e, y) = y. Throws
// SpecError on an invalid spec.
DirectedGraph apply_in_split(const DirectedGraph& g, const InSplitSpec& spec);

// For regular g: the in-split (psi, E1, alpha_1) of apply_in_split(g, spec)
// whose result is isomorphic to the dual graph of g.
InSplitSpec diamond_spec(const DirectedGraph& g, const InSplitSpec& spec);

struct ComposedInSplit {
  std::size_t power;
  InSplitSpec combined;  // an in-split of power_graph(g, power)
};

// Collapses a chain of in-splits (each on the previous stage's graph) into one
// in-split of the power graph g^n. Requires g regular.
ComposedInSplit compose_in_splits(const DirectedGraph& g, const std::vector<InSplitSpec>& specs);

// Classical single-vertex out-split at w. Empty classes are rejected unless
// `allow_empty` is set; an empty class yields a new vertex that psi misses.
OutSplitSpec out_split_from_partition(const DirectedGraph& g, VertexIndex w, const EdgePartition& partition,
                                      bool allow_empty = false);

// (Id, E0, s).
OutSplitSpec identity_out_split(const DirectedGraph& g);

// (s, E1, Id).
OutSplitSpec complete_out_split(const DirectedGraph& g);

// With `allow_unused_vertices`, vertices outside psi(E1) are tolerated.
ValidationReport validate_out_split(const DirectedGraph& g, const OutSplitSpec& spec,
                                    bool allow_unused_vertices = false);

// Edge set of the out-split graph as pairs (y, e) with alpha(y) = r(e).
std::vector<std::pair<std::size_t, EdgeIndex>> out_split_edge_pairs(const DirectedGraph& g,
                                                                    const OutSplitSpec& spec);

// E1_O = Y x_{alpha,r} E1 with r_O(y, e) = y, s_O(y, e) = psi(e).
DirectedGraph apply_out_split(const DirectedGraph& g, const OutSplitSpec& spec, bool allow_unused_vertices = false);

}  // namespace splitgraph
