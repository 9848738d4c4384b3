#pragma once

#include <cstddef>
#include <vector>

#include "splitgraph/graph.hpp"
#include "splitgraph/numeric.hpp"

// Slow reference computations that share no code with the library routines
// they are compared against.
namespace oracle {

using splitgraph::BigInt;
using splitgraph::IntMatrix;
using splitgraph::Polynomial;

// Cofactor expansion.
BigInt laplace_det(const IntMatrix& m);

// det(I - uA) by cofactor expansion over polynomial entries.
Polynomial laplace_char_poly(const IntMatrix& a);

// d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors; stops at the rank.
std::vector<BigInt> determinantal_factors(const IntMatrix& m);

// tr A^n by repeated multiplication, counting closed paths.
BigInt closed_path_count(const splitgraph::DirectedGraph& g, std::size_t n);

// Adjacency counted straight off the edge list.
IntMatrix brute_adjacency(const splitgraph::DirectedGraph& g);

}  // namespace oracle
