#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "splitgraph/graph.hpp"
#include "splitgraph/moves.hpp"
#include "splitgraph/numeric.hpp"

namespace splitgraph {

// A function on a finite point set, or a module element in basis coordinates.
using Vector = std::vector<Rational>;

/// Finite-dimensional correspondence over commutative algebras of functions on
/// finite point sets. Basis vector b is acted on from the left through rho(b)
/// and from the right through sigma(b); (x|y)(v) = sum over sigma(b) = v of
/// x(b) y(b). Coefficients are real so conjugation is omitted.
struct FinDimCorrespondence {
  std::vector<std::string> left_points;
  std::vector<std::string> right_points;
  std::vector<std::string> basis;
  std::vector<std::size_t> rho;
  std::vector<std::size_t> sigma;

  std::size_t dimension() const { return basis.size(); }
  Vector basis_vector(std::size_t b) const;

  Vector inner(const Vector& x, const Vector& y) const;
  Vector right_action(const Vector& x, const Vector& a) const;
  Vector left_action(const Vector& a, const Vector& x) const;
  // Theta_{x,y}(z) = x (y|z).
  RationalMatrix theta(const Vector& x, const Vector& y) const;
};

// Basis E1, sigma = s, rho = r, both algebras functions on E0.
FinDimCorrespondence graph_correspondence(const DirectedGraph& g);

// The algebra over itself: basis = points, sigma = rho = id.
FinDimCorrespondence identity_correspondence(const std::vector<std::string>& points);

// sum Theta_{x_i, x_i} == Id exactly.
bool verify_frame(const FinDimCorrespondence& x, const std::vector<Vector>& frame);

// Left points in the rho-image: the functions on which the left action is
// injective.
std::vector<std::size_t> covariance_ideal(const FinDimCorrespondence& x);

struct TensorProduct {
  FinDimCorrespondence module;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // basis b -> (b_x, b_y)
};

// Balanced tensor product over the right algebra of x (= left algebra of y).
// Basis pairs satisfy sigma_x(b_x) = rho_y(b_y) and are labelled "(b_x,b_y)".
TensorProduct tensor(const FinDimCorrespondence& x, const FinDimCorrespondence& y);

Vector tensor_element(const TensorProduct& t, const Vector& x, const Vector& y);

/// (alpha, beta) between correspondences over one algebra each (left and
/// right points coincide). alpha is a point map target -> source inducing
/// a |-> a o alpha; beta is a dim(target) x dim(source) matrix.
struct CorrespondenceMorphism {
  std::vector<std::size_t> alpha;
  RationalMatrix beta;
};

Vector pull_back(const std::vector<std::size_t>& alpha, const Vector& a);

// The three axioms checked on basis vectors and point indicators. Returns the
// violations found (empty = morphism).
std::vector<std::string> check_morphism(const FinDimCorrespondence& from, const FinDimCorrespondence& to,
                                        const CorrespondenceMorphism& m);

// Morphism axioms plus square full-rank beta.
std::vector<std::string> check_isomorphism(const FinDimCorrespondence& from, const FinDimCorrespondence& to,
                                           const CorrespondenceMorphism& m);

struct InSplitCorrespondence {
  FinDimCorrespondence x;       // X(E)
  FinDimCorrespondence module;  // X tensored with B over alpha
  FinDimCorrespondence split;   // X(E_I)
  CorrespondenceMorphism structural;  // X(E) -> module, delta_e -> sum over alpha(y) = s(e)
  CorrespondenceMorphism iso;         // module -> X(E_I)
  std::vector<std::size_t> j_phi;     // covariance ideal of X(E), as vertices
  std::vector<std::size_t> j_psi;     // of the B-A correspondence X with left action via psi
  std::vector<std::size_t> j_module;  // of the module
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  std::string to_string() const;
};

// Builds the module, the isomorphism onto X(E_I), and checks every axiom,
// the covariance ideal identities and the quotient bijection.
InSplitCorrespondence insplit_correspondence(const DirectedGraph& g, const InSplitSpec& spec);

struct BDecomposition {
  Vector a;  // on E0
  Vector k;  // on the new vertices, supported on psi(E1)
};

// b = alpha*(a) + k. At a source v, a(v) is b at the unique new vertex over v;
// elsewhere a(v) is the common value of b on the fibre, or 0 if b varies.
BDecomposition decompose_b(const DirectedGraph& g, const InSplitSpec& spec, const Vector& b);

// Lambda(b)(v) = sum over alpha(u) = v of b(u).
Vector conditional_expectation(const DirectedGraph& g, const OutSplitSpec& spec, const Vector& b);

struct OutSplitCorrespondence {
  FinDimCorrespondence x;         // X(E)
  FinDimCorrespondence b_lambda;  // B as a B-A correspondence through Lambda
  FinDimCorrespondence x_b;       // X with right action through psi
  FinDimCorrespondence module;    // B^Lambda tensored with X_B
  FinDimCorrespondence split;     // X(E_O)
  CorrespondenceMorphism iso;     // module -> X(E_O)
  FinDimCorrespondence factor;    // X_B tensored with B^Lambda
  CorrespondenceMorphism factor_iso;  // factor -> X(E)
  bool lambda_left_inverse = false;   // Lambda o alpha* = Id
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  std::string to_string() const;
};

OutSplitCorrespondence outsplit_correspondence(const DirectedGraph& g, const OutSplitSpec& spec);

struct DiagonalReport {
  std::size_t level = 0;
  std::size_t dimension = 0;    // of the k-fold tensor power on the split side
  std::size_t projections = 0;  // path projections checked
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// At tensor level k: the identification of (X tensor B)^k with X^k tensor B
// is a basis permutation, and each path projection P_mu tensor Id pulls back
// to a diagonal projection; together they sum to the identity.
DiagonalReport diagonal_level_check(const DirectedGraph& g, const InSplitSpec& spec, std::size_t k);

}  // namespace splitgraph
