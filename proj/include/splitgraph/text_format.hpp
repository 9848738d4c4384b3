#pragma once

#include <string>
#include <variant>

#include "splitgraph/graph.hpp"
#include "splitgraph/moves.hpp"
#include "splitgraph/numeric.hpp"
#include "splitgraph/sse.hpp"

namespace splitgraph {

// All parsers report ParseError with the given file name and a 1-based line.
// '#' starts a comment; blank lines are ignored.

// graph <name> / vertex <id> / edge <id> <source> <range>
DirectedGraph parse_graph(const std::string& text, const std::string& file = "<input>");
std::string serialize_graph(const DirectedGraph& g);

// insplit | outsplit, then either `newvertex <id> over <orig>` and
// `psi <edge> <newvertex>` lines, or a single `partition <w> { ... } { ... }`.
struct SplitSpecFile {
  std::variant<InSplitSpec, OutSplitSpec> spec;

  bool is_in_split() const { return spec.index() == 0; }
  const InSplitSpec& in() const { return std::get<InSplitSpec>(spec); }
  const OutSplitSpec& out() const { return std::get<OutSplitSpec>(spec); }
};

SplitSpecFile parse_split_spec(const std::string& text, const DirectedGraph& g, const std::string& file = "<input>",
                               bool allow_empty_classes = false);
// Always the general newvertex/psi form.
std::string serialize_spec(const DirectedGraph& g, const InSplitSpec& spec);
std::string serialize_spec(const DirectedGraph& g, const OutSplitSpec& spec);

// matrix <rows> <cols>, then one line per row.
IntMatrix parse_matrix(const std::string& text, const std::string& file = "<input>");
std::string serialize_matrix(const IntMatrix& m);

// Optional `roles A=RS,B=SR | B=RS,A=SR` line (default A=RS,B=SR), then R, then S.
SseWitness parse_witness(const std::string& text, const std::string& file = "<input>");
std::string serialize_witness(const SseWitness& w);

std::string export_dot(const DirectedGraph& g);

// Whole file as a string; throws Error if it cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace splitgraph
