#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitgraph/graph.hpp"
#include "splitgraph/moves.hpp"
#include "splitgraph/numeric.hpp"
#include "splitgraph/sse.hpp"

namespace splitgraph {

/// Sliding block code between edge shifts. A window is a source path of
/// length memory + anticipation + 1; its image is the target edge at the
/// coordinate `memory` positions into the window.
struct BlockCode {
  DirectedGraph source;
  DirectedGraph target;
  std::size_t memory = 0;
  std::size_t anticipation = 0;
  std::map<Path, EdgeIndex> table;
  // 1-block inverse: target edge -> source edge at the same coordinate.
  std::vector<EdgeIndex> inverse;

  std::size_t window() const { return memory + anticipation + 1; }

  // Image of a source path of length >= window(); nullopt if some window is
  // missing from the table.
  std::optional<Path> apply(const Path& p) const;
};

// e_k e_{k+1} -> (e_k, psi(e_{k+1})).
BlockCode in_split_block_code(const DirectedGraph& g, const InSplitSpec& spec);

// f_1 f_2 -> (psi(f_1), f_2), built from the in-split code of the reversed
// graph and checked against apply_out_split.
BlockCode out_split_block_code(const DirectedGraph& g, const OutSplitSpec& spec);

struct CertificateReport {
  std::size_t window = 0;  // L
  std::size_t source_paths = 0;
  std::size_t target_paths = 0;
  std::size_t image_size = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  std::string to_string() const;
};

// Exhaustive check over source paths of length L + memory + anticipation:
// images are target L-paths, every target L-path is hit, equal images force
// equal source coordinates, the code commutes with dropping the first edge,
// and the 1-block inverse recovers the source. Throws std::invalid_argument
// for L < 2.
CertificateReport verify_certificate(const BlockCode& code, std::size_t window);

struct InvariantReport {
  std::size_t horizon = 0;
  std::vector<BigInt> traces_a, traces_b;
  Polynomial poly_a, poly_b;
  BowenFranks bf_a, bf_b;

  bool traces_agree() const { return traces_a == traces_b; }
  bool poly_agree() const { return poly_a == poly_b; }
  bool bf_agree() const { return bf_a == bf_b; }
  bool all_agree() const { return traces_agree() && poly_agree() && bf_agree(); }
  std::string to_string() const;
};

InvariantReport invariant_report(const IntMatrix& a, const IntMatrix& b, std::size_t n);

}  // namespace splitgraph
