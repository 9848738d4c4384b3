#include "splitgraph/correspondence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace splitgraph {

Vector FinDimCorrespondence::basis_vector(std::size_t b) const {
  Vector v(dimension());
  v.at(b) = 1;
  return v;
}

Vector FinDimCorrespondence::inner(const Vector& x, const Vector& y) const {
  if (x.size() != dimension() || y.size() != dimension()) throw DimensionError("inner: element size mismatch");
  Vector out(right_points.size());
  for (std::size_t b = 0; b < dimension(); ++b) out[sigma[b]] += x[b] * y[b];
  return out;
}

Vector FinDimCorrespondence::right_action(const Vector& x, const Vector& a) const {
  if (x.size() != dimension() || a.size() != right_points.size()) throw DimensionError("right action: size mismatch");
  Vector out(dimension());
  for (std::size_t b = 0; b < dimension(); ++b) out[b] = x[b] * a[sigma[b]];
  return out;
}

Vector FinDimCorrespondence::left_action(const Vector& a, const Vector& x) const {
  if (x.size() != dimension() || a.size() != left_points.size()) throw DimensionError("left action: size mismatch");
  Vector out(dimension());
  for (std::size_t b = 0; b < dimension(); ++b) out[b] = a[rho[b]] * x[b];
  return out;
}

RationalMatrix FinDimCorrespondence::theta(const Vector& x, const Vector& y) const {
  RationalMatrix t(dimension(), dimension());
  for (std::size_t b = 0; b < dimension(); ++b) {
    if (x[b] == 0) continue;
    for (std::size_t c = 0; c < dimension(); ++c)
      if (sigma[b] == sigma[c]) t(b, c) = x[b] * y[c];
  }
  return t;
}

FinDimCorrespondence graph_correspondence(const DirectedGraph& g) {
  FinDimCorrespondence x;
  x.left_points.assign(g.vertices().begin(), g.vertices().end());
  x.right_points = x.left_points;
  for (const auto& e : g.edges()) {
    x.basis.push_back(e.id);
    x.rho.push_back(e.range);
    x.sigma.push_back(e.source);
  }
  return x;
}

FinDimCorrespondence identity_correspondence(const std::vector<std::string>& points) {
  FinDimCorrespondence x{points, points, points, {}, {}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    x.rho.push_back(i);
    x.sigma.push_back(i);
  }
  return x;
}

bool verify_frame(const FinDimCorrespondence& x, const std::vector<Vector>& frame) {
  RationalMatrix sum(x.dimension(), x.dimension());
  for (const auto& f : frame) {
    if (f.size() != x.dimension()) return false;
    sum = sum + x.theta(f, f);
  }
  return sum == RationalMatrix::identity(x.dimension());
}

std::vector<std::size_t> covariance_ideal(const FinDimCorrespondence& x) {
  std::set<std::size_t> hit(x.rho.begin(), x.rho.end());
  return {hit.begin(), hit.end()};
}

TensorProduct tensor(const FinDimCorrespondence& x, const FinDimCorrespondence& y) {
  if (x.right_points != y.left_points) throw DimensionError("tensor: coefficient algebras differ");
  TensorProduct t;
  t.module.left_points = x.left_points;
  t.module.right_points = y.right_points;
  for (std::size_t bx = 0; bx < x.dimension(); ++bx)
    for (std::size_t by = 0; by < y.dimension(); ++by) {
      if (x.sigma[bx] != y.rho[by]) continue;
      t.pairs.emplace_back(bx, by);
      t.module.basis.push_back("(" + x.basis[bx] + "," + y.basis[by] + ")");
      t.module.rho.push_back(x.rho[bx]);
      t.module.sigma.push_back(y.sigma[by]);
    }
  return t;
}

Vector tensor_element(const TensorProduct& t, const Vector& x, const Vector& y) {
  Vector out(t.pairs.size());
  for (std::size_t b = 0; b < t.pairs.size(); ++b) out[b] = x.at(t.pairs[b].first) * y.at(t.pairs[b].second);
  return out;
}

Vector pull_back(const std::vector<std::size_t>& alpha, const Vector& a) {
  Vector out(alpha.size());
  for (std::size_t y = 0; y < alpha.size(); ++y) out[y] = a.at(alpha[y]);
  return out;
}

namespace {

Vector times(const RationalMatrix& m, const Vector& x) {
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[i] += m(i, j) * x[j];
  return out;
}

// Boost's generic comparison operators make vector != ambiguous.
bool same(const Vector& a, const Vector& b) { return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin()); }

Vector indicator(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

std::string join_points(const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + names[idx[i]];
  return s + "}";
}

}  // namespace

std::vector<std::string> check_morphism(const FinDimCorrespondence& from, const FinDimCorrespondence& to,
                                        const CorrespondenceMorphism& m) {
  std::vector<std::string> failures;
  if (from.left_points != from.right_points || to.left_points != to.right_points) {
    failures.push_back("morphism: left and right algebras must coincide");
    return failures;
  }
  if (m.alpha.size() != to.right_points.size() ||
      std::any_of(m.alpha.begin(), m.alpha.end(), [&](std::size_t p) { return p >= from.right_points.size(); })) {
    failures.push_back("morphism: alpha is not a map between the point sets");
    return failures;
  }
  if (m.beta.rows() != to.dimension() || m.beta.cols() != from.dimension()) {
    failures.push_back("morphism: beta is " + m.beta.shape());
    return failures;
  }
  const std::size_t n = from.dimension();
  const std::size_t points = from.right_points.size();
  std::vector<Vector> images(n);
  for (std::size_t b = 0; b < n; ++b) images[b] = times(m.beta, from.basis_vector(b));

  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      if (!same(to.inner(images[b], images[c]),
                pull_back(m.alpha, from.inner(from.basis_vector(b), from.basis_vector(c))))) {
        failures.push_back("inner product not preserved for (" + from.basis[b] + "|" + from.basis[c] + ")");
      }
    }
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t v = 0; v < points; ++v) {
      const Vector a = indicator(points, v);
      const Vector a_up = pull_back(m.alpha, a);
      if (!same(times(m.beta, from.right_action(from.basis_vector(b), a)), to.right_action(images[b], a_up))) {
        failures.push_back("right action not preserved for " + from.basis[b] + " at " + from.right_points[v]);
      }
      if (!same(times(m.beta, from.left_action(a, from.basis_vector(b))), to.left_action(a_up, images[b]))) {
        failures.push_back("left action not preserved for " + from.basis[b] + " at " + from.left_points[v]);
      }
    }
  return failures;
}

std::vector<std::string> check_isomorphism(const FinDimCorrespondence& from, const FinDimCorrespondence& to,
                                           const CorrespondenceMorphism& m) {
  auto failures = check_morphism(from, to, m);
  if (from.dimension() != to.dimension()) {
    failures.push_back("dimensions differ: " + std::to_string(from.dimension()) + " vs " +
                       std::to_string(to.dimension()));
  } else if (m.beta.rows() == to.dimension() && m.beta.cols() == from.dimension() && rank(m.beta) != to.dimension()) {
    failures.push_back("beta is not invertible");
  }
  return failures;
}

namespace {

std::vector<Vector> standard_frame(const FinDimCorrespondence& x) {
  std::vector<Vector> frame;
  for (std::size_t b = 0; b < x.dimension(); ++b) frame.push_back(x.basis_vector(b));
  return frame;
}

void require_frame(const FinDimCorrespondence& x, const std::string& name, std::vector<std::string>& failures) {
  if (!verify_frame(x, standard_frame(x))) failures.push_back("standard basis of " + name + " is not a frame");
}

void append(std::vector<std::string>& out, const std::string& prefix, const std::vector<std::string>& more) {
  for (const auto& m : more) out.push_back(prefix + m);
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return id;
}

}  // namespace

std::string InSplitCorrespondence::to_string() const {
  std::ostringstream os;
  os << "dim X(E) " << x.dimension() << ", dim X(x)B " << module.dimension() << ", dim X(E_I) " << split.dimension()
     << '\n';
  os << "J_phi " << join_points(x.left_points, j_phi) << '\n';
  os << "J_psi " << join_points(split.left_points, j_psi) << '\n';
  os << "J of X(x)B " << join_points(module.left_points, j_module) << '\n';
  for (const auto& f : failures) os << "FAIL " << f << '\n';
  os << (passed() ? "PASS" : "FAIL") << " in-split correspondence\n";
  return os.str();
}

InSplitCorrespondence insplit_correspondence(const DirectedGraph& g, const InSplitSpec& spec) {
  InSplitCorrespondence out;
  const DirectedGraph split_graph = apply_in_split(g, spec);
  const auto edge_pairs = in_split_edge_pairs(g, spec);
  const std::vector<std::string> vertices(g.vertices().begin(), g.vertices().end());

  out.x = graph_correspondence(g);
  FinDimCorrespondence x_psi{spec.new_vertices, vertices, out.x.basis, spec.psi, out.x.sigma};
  FinDimCorrespondence b_alpha{vertices, spec.new_vertices, spec.new_vertices, spec.alpha,
                               identity_map(spec.new_vertices.size())};
  const TensorProduct t = tensor(x_psi, b_alpha);
  out.module = t.module;
  out.split = graph_correspondence(split_graph);

  std::map<std::pair<EdgeIndex, std::size_t>, std::size_t> split_index;
  for (std::size_t i = 0; i < edge_pairs.size(); ++i) split_index.emplace(edge_pairs[i], i);

  const std::size_t dim = out.module.dimension();
  out.iso = {identity_map(spec.new_vertices.size()), RationalMatrix(out.split.dimension(), dim)};
  out.structural = {spec.alpha, RationalMatrix(dim, out.x.dimension())};
  for (std::size_t b = 0; b < dim; ++b) {
    const auto [e, y] = t.pairs[b];
    auto it = split_index.find({e, y});
    if (it == split_index.end()) {
      out.failures.push_back("basis element " + out.module.basis[b] + " has no edge in E_I");
    } else {
      out.iso.beta(it->second, b) = 1;
    }
    out.structural.beta(b, e) = 1;
  }

  if (dim != split_graph.edge_count()) {
    out.failures.push_back("dim X(x)B = " + std::to_string(dim) + " but |E1_I| = " +
                           std::to_string(split_graph.edge_count()));
  }
  append(out.failures, "X(x)B -> X(E_I): ", check_isomorphism(out.module, out.split, out.iso));
  append(out.failures, "X(E) -> X(x)B: ", check_morphism(out.x, out.module, out.structural));
  require_frame(out.x, "X(E)", out.failures);
  require_frame(out.module, "X(x)B", out.failures);
  require_frame(out.split, "X(E_I)", out.failures);

  out.j_phi = covariance_ideal(out.x);
  out.j_psi = covariance_ideal(x_psi);
  out.j_module = covariance_ideal(out.module);
  std::set<std::size_t> psi_image(spec.psi.begin(), spec.psi.end());
  if (out.j_psi != std::vector<std::size_t>(psi_image.begin(), psi_image.end())) {
    out.failures.push_back("J_psi differs from psi(E1)");
  }
  if (out.j_module != out.j_psi) out.failures.push_back("covariance ideal of X(x)B differs from J_psi");
  if (covariance_ideal(out.split) != out.j_psi) out.failures.push_back("covariance ideal of X(E_I) differs from J_psi");

  // alpha maps J_phi into J_psi and induces a bijection of the quotients.
  const std::set<std::size_t> j_phi(out.j_phi.begin(), out.j_phi.end());
  std::map<std::size_t, std::size_t> quotient_hits;
  for (std::size_t y = 0; y < spec.new_vertices.size(); ++y) {
    const bool in_j_psi = psi_image.count(y) > 0;
    if (j_phi.count(spec.alpha[y]) && !in_j_psi) {
      out.failures.push_back("alpha does not map J_phi into J_psi at " + spec.new_vertices[y]);
    }
    if (!in_j_psi) ++quotient_hits[spec.alpha[y]];
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (j_phi.count(v)) continue;
    if (quotient_hits[v] != 1) out.failures.push_back("quotient map is not bijective over " + g.vertex(v));
  }
  for (const auto& [v, count] : quotient_hits) {
    if (j_phi.count(v)) out.failures.push_back("quotient point over " + g.vertex(v) + " lies in J_phi");
    (void)count;
  }
  return out;
}

BDecomposition decompose_b(const DirectedGraph& g, const InSplitSpec& spec, const Vector& b) {
  if (b.size() != spec.new_vertices.size()) throw DimensionError("decompose_b: element size mismatch");
  BDecomposition d{Vector(g.vertex_count()), {}};
  std::vector<std::vector<std::size_t>> fibre(g.vertex_count());
  for (std::size_t y = 0; y < spec.alpha.size(); ++y) fibre[spec.alpha[y]].push_back(y);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto& ys = fibre[v];
    if (ys.empty()) continue;
    if (g.in_edges(v).empty()) {
      d.a[v] = b[ys.front()];
      continue;
    }
    const bool constant = std::all_of(ys.begin(), ys.end(), [&](std::size_t y) { return b[y] == b[ys.front()]; });
    d.a[v] = constant ? b[ys.front()] : Rational(0);
  }
  const Vector lifted = pull_back(spec.alpha, d.a);
  d.k.resize(b.size());
  for (std::size_t y = 0; y < b.size(); ++y) d.k[y] = b[y] - lifted[y];
  return d;
}

Vector conditional_expectation(const DirectedGraph& g, const OutSplitSpec& spec, const Vector& b) {
  if (b.size() != spec.new_vertices.size()) throw DimensionError("conditional_expectation: element size mismatch");
  Vector out(g.vertex_count());
  for (std::size_t u = 0; u < b.size(); ++u) out[spec.alpha[u]] += b[u];
  return out;
}

std::string OutSplitCorrespondence::to_string() const {
  std::ostringstream os;
  os << "dim X(E) " << x.dimension() << ", dim B^L(x)X " << module.dimension() << ", dim X(E_O) "
     << split.dimension() << '\n';
  os << "X_B(x)B^L = X(E): " << (factor.dimension() == x.dimension() ? "dimension " : "dimension mismatch ")
     << factor.dimension() << '\n';
  os << "Lambda o alpha* = Id: " << (lambda_left_inverse ? "yes" : "no (alpha is not injective)") << '\n';
  for (const auto& f : failures) os << "FAIL " << f << '\n';
  os << (passed() ? "PASS" : "FAIL") << " out-split correspondence\n";
  return os.str();
}

OutSplitCorrespondence outsplit_correspondence(const DirectedGraph& g, const OutSplitSpec& spec) {
  OutSplitCorrespondence out;
  const DirectedGraph split_graph = apply_out_split(g, spec);
  const auto edge_pairs = out_split_edge_pairs(g, spec);
  const std::vector<std::string> vertices(g.vertices().begin(), g.vertices().end());
  const std::size_t ny = spec.new_vertices.size();

  out.x = graph_correspondence(g);
  out.b_lambda = {spec.new_vertices, vertices, spec.new_vertices, identity_map(ny), spec.alpha};
  out.x_b = {vertices, spec.new_vertices, out.x.basis, out.x.rho, spec.psi};
  const TensorProduct t = tensor(out.b_lambda, out.x_b);
  out.module = t.module;
  out.split = graph_correspondence(split_graph);

  std::map<std::pair<std::size_t, EdgeIndex>, std::size_t> split_index;
  for (std::size_t i = 0; i < edge_pairs.size(); ++i) split_index.emplace(edge_pairs[i], i);
  out.iso = {identity_map(ny), RationalMatrix(out.split.dimension(), out.module.dimension())};
  for (std::size_t b = 0; b < t.pairs.size(); ++b) {
    auto it = split_index.find(t.pairs[b]);
    if (it == split_index.end()) {
      out.failures.push_back("basis element " + out.module.basis[b] + " has no edge in E_O");
    } else {
      out.iso.beta(it->second, b) = 1;
    }
  }
  if (out.module.dimension() != split_graph.edge_count()) {
    out.failures.push_back("dim B^L(x)X = " + std::to_string(out.module.dimension()) + " but |E1_O| = " +
                           std::to_string(split_graph.edge_count()));
  }
  append(out.failures, "B^L(x)X -> X(E_O): ", check_isomorphism(out.module, out.split, out.iso));

  const TensorProduct f = tensor(out.x_b, out.b_lambda);
  out.factor = f.module;
  out.factor_iso = {identity_map(g.vertex_count()), RationalMatrix(out.x.dimension(), out.factor.dimension())};
  for (std::size_t b = 0; b < f.pairs.size(); ++b) out.factor_iso.beta(f.pairs[b].first, b) = 1;
  append(out.failures, "X_B(x)B^L -> X(E): ", check_isomorphism(out.factor, out.x, out.factor_iso));

  require_frame(out.x, "X(E)", out.failures);
  require_frame(out.module, "B^L(x)X", out.failures);
  require_frame(out.split, "X(E_O)", out.failures);
  require_frame(out.factor, "X_B(x)B^L", out.failures);

  // Lambda(alpha*(a1) b alpha*(a2)) = a1 Lambda(b) a2 on indicators.
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    for (VertexIndex w = 0; w < g.vertex_count(); ++w)
      for (std::size_t u = 0; u < ny; ++u) {
        const Vector a1 = pull_back(spec.alpha, indicator(g.vertex_count(), v));
        const Vector a2 = pull_back(spec.alpha, indicator(g.vertex_count(), w));
        Vector b = indicator(ny, u);
        for (std::size_t i = 0; i < ny; ++i) b[i] *= a1[i] * a2[i];
        Vector rhs = conditional_expectation(g, spec, indicator(ny, u));
        for (VertexIndex i = 0; i < g.vertex_count(); ++i) rhs[i] *= Rational(i == v) * Rational(i == w);
        if (!same(conditional_expectation(g, spec, b), rhs)) {
          out.failures.push_back("Lambda is not bimodular at " + spec.new_vertices[u]);
        }
      }

  out.lambda_left_inverse = true;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const Vector a = indicator(g.vertex_count(), v);
    if (!same(conditional_expectation(g, spec, pull_back(spec.alpha, a)), a)) out.lambda_left_inverse = false;
  }
  return out;
}

DiagonalReport diagonal_level_check(const DirectedGraph& g, const InSplitSpec& spec, std::size_t k) {
  if (k == 0) throw std::invalid_argument("diagonal_level_check requires k >= 1");
  DiagonalReport report;
  report.level = k;
  const DirectedGraph split_graph = apply_in_split(g, spec);
  const auto edge_pairs = in_split_edge_pairs(g, spec);

  // Left side: (X(x)B)^k, whose basis is the k-paths of E_I.
  const auto left = paths(split_graph, k);
  // Right side: X^k (x) B, basis (mu, y) with s(mu_k) = alpha(y).
  const auto mus = paths(g, k);
  std::map<std::pair<Path, std::size_t>, std::size_t> right_index;
  std::vector<std::size_t> right_mu;
  for (std::size_t m = 0; m < mus.size(); ++m)
    for (std::size_t y = 0; y < spec.new_vertices.size(); ++y)
      if (spec.alpha[y] == g.source(mus[m].back())) {
        right_index.emplace(std::make_pair(mus[m], y), right_mu.size());
        right_mu.push_back(m);
      }
  report.dimension = left.size();

  // Phi((e1,y1) ... (ek,yk)) = prod [y_i = psi(e_{i+1})] (e1 ... ek, yk).
  std::vector<std::size_t> phi(left.size(), right_mu.size());
  std::vector<bool> hit(right_mu.size(), false);
  for (std::size_t i = 0; i < left.size(); ++i) {
    Path mu;
    bool factor = true;
    for (std::size_t j = 0; j < k; ++j) {
      const auto [e, y] = edge_pairs[left[i][j]];
      mu.push_back(e);
      if (j + 1 < k && y != spec.psi[edge_pairs[left[i][j + 1]].first]) factor = false;
    }
    if (!factor) {
      report.failures.push_back("basis element " + path_label(split_graph, left[i]) + " is killed by Phi");
      continue;
    }
    auto it = right_index.find({mu, edge_pairs[left[i].back()].second});
    if (it == right_index.end() || hit[it->second]) {
      report.failures.push_back("Phi is not injective at " + path_label(split_graph, left[i]));
      continue;
    }
    phi[i] = it->second;
    hit[it->second] = true;
  }
  if (left.size() != right_mu.size() || std::find(hit.begin(), hit.end(), false) != hit.end()) {
    report.failures.push_back("Phi is not onto X^k(x)B");
  }
  if (!report.failures.empty()) return report;

  // beta^(k)(P_mu) = Phi^-1 (P_mu (x) Id) Phi; Phi is a permutation so its
  // inverse is its transpose. Entry (i, j) is [phi(i) = phi(j)] D(phi(i)).
  std::vector<Rational> total(left.size());
  std::vector<std::vector<std::size_t>> preimage(right_mu.size());
  for (std::size_t i = 0; i < left.size(); ++i) preimage[phi[i]].push_back(i);
  for (std::size_t m = 0; m < mus.size(); ++m) {
    ++report.projections;
    for (std::size_t a = 0; a < right_mu.size(); ++a) {
      if (right_mu[a] != m) continue;
      const auto& rows = preimage[a];
      for (std::size_t i : rows)
        for (std::size_t j : rows) {
          if (i != j) {
            report.failures.push_back("pulled-back projection of " + path_label(g, mus[m]) + " is not diagonal");
          } else {
            total[i] += 1;
          }
        }
    }
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (total[i] != 1) {
      report.failures.push_back("projections do not sum to the identity at " + path_label(split_graph, left[i]));
    }
  }
  return report;
}

}  // namespace splitgraph
