#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitgraph/numeric.hpp"

namespace splitgraph {

// The point exp(2 pi i p/q), stored as a fraction in [0, 1).
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(const Rational& turns);  // NOLINT: implicit by design
  RationalAngle(long long p, long long q);

  const Rational& turns() const { return value_; }
  BigInt numerator() const;
  BigInt denominator() const;

  friend bool operator==(const RationalAngle& a, const RationalAngle& b) { return a.value_ == b.value_; }
  friend bool operator<(const RationalAngle& a, const RationalAngle& b) { return a.value_ < b.value_; }
  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b);
  friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b);
  friend RationalAngle operator*(long long k, const RationalAngle& a);

  std::string to_string() const;  // "p/q", or "0"

 private:
  Rational value_ = 0;
};

// theta -> k theta + rotation on one source component, landing in `target`.
struct CirclePiece {
  std::size_t target = 0;
  long long exponent = 1;
  RationalAngle rotation;

  RationalAngle operator()(const RationalAngle& theta) const { return exponent * theta + rotation; }
  friend bool operator==(const CirclePiece&, const CirclePiece&) = default;
};

using CircleMap = std::vector<CirclePiece>;  // one piece per source component

struct CircleGraph {
  std::size_t vertex_components = 1;
  std::size_t edge_components = 1;
  CircleMap r;
  CircleMap s;
};

// Throws std::invalid_argument on a zero exponent or a map that does not
// cover every edge component.
void validate(const CircleGraph& g);

// One vertex circle, one edge circle, r(z) = z^m, s(z) = z^n.
CircleGraph power_circle_graph(long long m, long long n);

long long component_count(long long k1, long long k2);

enum class Presentation {
  pi,        // offsets (0, -c/k2 + l/|k2|)
  pi_prime,  // offsets (c/k1 + l/|k1|, 0)
};

/// {(t1, t2) : f(t1) = g(t2)} for pieces with a common target. Component l is
/// theta -> (q2 theta + eta1_l, q1 theta + eta2_l) with k_i = d q_i.
struct FibredProduct {
  CirclePiece f;
  CirclePiece g;
  long long d = 1;
  long long q1 = 1;
  long long q2 = 1;
  std::vector<std::pair<RationalAngle, RationalAngle>> offsets;

  std::size_t components() const { return offsets.size(); }
  std::pair<RationalAngle, RationalAngle> point(std::size_t component, const RationalAngle& theta) const;
  bool contains(const RationalAngle& t1, const RationalAngle& t2) const;
};

FibredProduct fibred_product(const CirclePiece& f, const CirclePiece& g, Presentation p = Presentation::pi);

struct GridReport {
  long long q = 0;
  std::size_t solutions = 0;
  std::size_t covered_once = 0;
  std::size_t orbits = 0;  // classes under stepping along the tangent (q2, q1)/Q
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  std::string to_string() const;
};

// Brute force over the grid (a/Q, b/Q): every solution is hit by exactly one
// (component, theta), and sampled parametrized points are solutions. The orbit
// count does not use the parametrization.
GridReport verify_parametrization(const FibredProduct& product, long long q);

struct CircleSplit {
  FibredProduct product;
  CircleGraph graph;
};

// e with one vertex and one edge circle; psi(z) = z^a, alpha(z) = rot_r z^b,
// m = a b. Edge space E1 x_{s,alpha} T.
CircleSplit circle_in_split(const CircleGraph& e, long long a, long long b, Presentation p = Presentation::pi);

// psi(z) = z^a, alpha(z) = rot_s z^b, n = a b. Edge space T x_{alpha,r} E1.
CircleSplit circle_out_split(const CircleGraph& e, long long a, long long b, Presentation p = Presentation::pi);

// Edge-component bijection with rotations theta -> theta + t_l carrying r and
// s of one graph onto the other; vertex circles fixed.
bool presentations_isomorphic(const CircleGraph& x, const CircleGraph& y);

std::string describe(const CircleGraph& g, const std::string& label);

// Known reference presentation for (m, n, a, b) = (2, 2, 1, 2): r = (-1)^l z^2,
// s = z^2 on two edge circles. nullopt for other parameters.
std::optional<CircleGraph> reference_in_split_presentation(long long m, long long n, long long a, long long b);

}  // namespace splitgraph
