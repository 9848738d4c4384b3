#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "splitgraph/moves.hpp"
#include "splitgraph/numeric.hpp"

namespace splitgraph {

// Which product of a witness equals which matrix of the pair (A, B).
enum class WitnessRoles {
  a_is_rs,  // A = RS, B = SR
  b_is_rs,  // B = RS, A = SR
};

std::string to_string(WitnessRoles roles);
// Accepts "A=RS,B=SR" and "B=RS,A=SR" (either clause order).
std::optional<WitnessRoles> parse_roles(const std::string& text);

/// Rectangular nonnegative pair (R, S) witnessing an elementary strong shift
/// equivalence. The roles record the orientation, which differs between
/// in-split and out-split conventions.
struct SseWitness {
  IntMatrix r;
  IntMatrix s;
  WitnessRoles roles = WitnessRoles::a_is_rs;

  friend bool operator==(const SseWitness&, const SseWitness&) = default;
};

struct EntryMismatch {
  std::string equation;  // e.g. "B = RS"
  std::size_t row;       // 1-based
  std::size_t col;       // 1-based
  BigInt expected;
  BigInt actual;
};

struct SseCheck {
  bool shapes_ok = true;
  std::string shape_problem;
  std::vector<EntryMismatch> mismatches;

  bool passed() const { return shapes_ok && mismatches.empty(); }
  std::string to_string() const;
};

// Full diagnostic: shape problems and every mismatching entry.
SseCheck check_elementary_sse(const IntMatrix& a, const IntMatrix& b, const SseWitness& w);

// True iff the two products match A and B exactly under w.roles. Throws
// DimensionError when the shapes cannot compose.
bool verify_elementary_sse(const IntMatrix& a, const IntMatrix& b, const SseWitness& w);

// R[y][u] = [alpha(y) = u], S[u][y] = #{e : s(e) = u, psi(e) = y}; roles B = RS, A = SR
// with A the adjacency of g and B that of the split graph.
SseWitness in_split_witness(const DirectedGraph& g, const InSplitSpec& spec);

// R[u][y] = [alpha(y) = u], S[y][u] = #{e : psi(e) = y, r(e) = u}; roles A = RS, B = SR.
SseWitness out_split_witness(const DirectedGraph& g, const OutSplitSpec& spec);

// Z = [[0, R], [S, 0]]; Z^2 = diag(RS, SR).
IntMatrix bipartite_inflation(const SseWitness& w);

// [tr A, tr A^2, ..., tr A^n].
std::vector<BigInt> trace_sequence(const IntMatrix& a, std::size_t n);

// det(I - uA) as a polynomial in u.
Polynomial weighted_char_poly(const IntMatrix& a);

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ... and
/// nonnegative entries.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix diagonal;

  // Nonzero diagonal entries in order.
  std::vector<BigInt> invariant_factors() const;
  // Number of zero diagonal positions (min(rows, cols) - rank).
  std::size_t zero_count() const;
};

// Every result is checked against its defining properties before returning;
// a failure there throws std::logic_error.
SmithForm smith_normal_form(const IntMatrix& m);

// Throws std::logic_error naming the first violated property.
void check_smith_form(const IntMatrix& m, const SmithForm& form);

struct BowenFranks {
  std::vector<BigInt> invariant_factors;  // of I - A, nonzero only
  std::size_t free_rank = 0;              // copies of Z in coker(I - A)
  int det_sign = 0;                       // sign of det(I - A)
  BigInt det;

  // Factors > 1: the torsion of coker(I - A). Unit factors depend on the size.
  std::vector<BigInt> torsion() const;

  // Same group and same sign of det(I - A).
  friend bool operator==(const BowenFranks& a, const BowenFranks& b) {
    return a.torsion() == b.torsion() && a.free_rank == b.free_rank && a.det_sign == b.det_sign;
  }
  std::string to_string() const;
};

BowenFranks bowen_franks(const IntMatrix& a);

enum class SearchStatus {
  found,
  rejected_by_invariant,  // some conjugacy invariant differs: no SSE exists at all
  none_within_bound,      // exhaustive search up to the entry bound found nothing
  inconclusive,           // budget exhausted before the search space was covered
};

std::string to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status;
  std::optional<SseWitness> witness;  // roles A = RS, B = SR
  std::string reason;
  std::size_t nodes = 0;
};

// Backtracking search for R (m x n) and S (n x m) with A = RS and B = SR and
// entries in [0, entry_bound]. Returns the witness that is smallest in the
// order (R column-major, then S column-major).
SearchResult search_elementary_sse(const IntMatrix& a, const IntMatrix& b, unsigned entry_bound,
                                   std::chrono::milliseconds budget);

struct ChainStep {
  IntMatrix from;
  SseWitness witness;
};

struct ChainReport {
  std::vector<std::string> failures;
  std::optional<IntMatrix> endpoint;  // matrix reached after the last step

  bool passed() const { return failures.empty(); }
};

// Each step's witness must factor `from` in its A-role; the other product is
// the next step's `from`.
ChainReport verify_sse_chain(const std::vector<ChainStep>& steps);

}  // namespace splitgraph
