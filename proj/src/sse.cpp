#include "splitgraph/sse.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace splitgraph {

std::string to_string(WitnessRoles roles) {
  return roles == WitnessRoles::a_is_rs ? "A=RS,B=SR" : "B=RS,A=SR";
}

std::optional<WitnessRoles> parse_roles(const std::string& text) {
  if (text == "A=RS,B=SR" || text == "B=SR,A=RS") return WitnessRoles::a_is_rs;
  if (text == "B=RS,A=SR" || text == "A=SR,B=RS") return WitnessRoles::b_is_rs;
  return std::nullopt;
}

std::string SseCheck::to_string() const {
  std::ostringstream os;
  if (!shapes_ok) os << "shape mismatch: " << shape_problem << '\n';
  for (const auto& m : mismatches) {
    const auto lhs = m.equation.substr(0, m.equation.find(' '));
    const auto rhs = m.equation.substr(m.equation.rfind(' ') + 1);
    os << lhs << " != " << rhs << " at (" << m.row << "," << m.col << "): " << lhs << " has " << m.expected << ", "
       << rhs << " has " << m.actual << '\n';
  }
  if (passed()) os << "witness verifies\n";
  return os.str();
}

namespace {

void compare(const std::string& equation, const IntMatrix& expected, const IntMatrix& actual, SseCheck& check) {
  for (std::size_t i = 0; i < expected.rows(); ++i)
    for (std::size_t j = 0; j < expected.cols(); ++j)
      if (expected(i, j) != actual(i, j)) check.mismatches.push_back({equation, i + 1, j + 1, expected(i, j), actual(i, j)});
}

std::string shape_problem(const IntMatrix& a, const IntMatrix& b, const SseWitness& w) {
  if (!a.is_square()) return "A is " + a.shape();
  if (!b.is_square()) return "B is " + b.shape();
  if (w.r.cols() != w.s.rows() || w.r.rows() != w.s.cols()) {
    return "R is " + w.r.shape() + " and S is " + w.s.shape();
  }
  const IntMatrix& rs_side = w.roles == WitnessRoles::a_is_rs ? a : b;
  const IntMatrix& sr_side = w.roles == WitnessRoles::a_is_rs ? b : a;
  const char* rs_name = w.roles == WitnessRoles::a_is_rs ? "A" : "B";
  const char* sr_name = w.roles == WitnessRoles::a_is_rs ? "B" : "A";
  if (rs_side.rows() != w.r.rows()) {
    return std::string(rs_name) + " is " + rs_side.shape() + " but RS is " + std::to_string(w.r.rows()) + "x" +
           std::to_string(w.r.rows());
  }
  if (sr_side.rows() != w.s.rows()) {
    return std::string(sr_name) + " is " + sr_side.shape() + " but SR is " + std::to_string(w.s.rows()) + "x" +
           std::to_string(w.s.rows());
  }
  return {};
}

bool nonnegative(const IntMatrix& m) {
  for (const auto& x : m.data())
    if (x < 0) return false;
  return true;
}

}  // namespace

SseCheck check_elementary_sse(const IntMatrix& a, const IntMatrix& b, const SseWitness& w) {
  SseCheck check;
  check.shape_problem = shape_problem(a, b, w);
  if (!check.shape_problem.empty()) {
    check.shapes_ok = false;
    return check;
  }
  if (!nonnegative(w.r) || !nonnegative(w.s)) {
    check.shapes_ok = false;
    check.shape_problem = "witness has negative entries";
    return check;
  }
  const IntMatrix rs = w.r * w.s;
  const IntMatrix sr = w.s * w.r;
  if (w.roles == WitnessRoles::a_is_rs) {
    compare("A = RS", a, rs, check);
    compare("B = SR", b, sr, check);
  } else {
    compare("B = RS", b, rs, check);
    compare("A = SR", a, sr, check);
  }
  return check;
}

bool verify_elementary_sse(const IntMatrix& a, const IntMatrix& b, const SseWitness& w) {
  if (auto problem = shape_problem(a, b, w); !problem.empty()) throw DimensionError(problem);
  return check_elementary_sse(a, b, w).passed();
}

SseWitness in_split_witness(const DirectedGraph& g, const InSplitSpec& spec) {
  if (const auto report = validate_in_split(g, spec); !report.ok()) throw SpecError("invalid in-split");
  const std::size_t ny = spec.new_vertices.size();
  SseWitness w{IntMatrix(ny, g.vertex_count()), IntMatrix(g.vertex_count(), ny), WitnessRoles::b_is_rs};
  for (std::size_t y = 0; y < ny; ++y) w.r(y, spec.alpha[y]) = 1;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) w.s(g.source(e), spec.psi[e]) += 1;
  return w;
}

SseWitness out_split_witness(const DirectedGraph& g, const OutSplitSpec& spec) {
  if (const auto report = validate_out_split(g, spec, true); !report.ok()) throw SpecError("invalid out-split");
  const std::size_t ny = spec.new_vertices.size();
  SseWitness w{IntMatrix(g.vertex_count(), ny), IntMatrix(ny, g.vertex_count()), WitnessRoles::a_is_rs};
  for (std::size_t y = 0; y < ny; ++y) w.r(spec.alpha[y], y) = 1;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) w.s(spec.psi[e], g.range(e)) += 1;
  return w;
}

IntMatrix bipartite_inflation(const SseWitness& w) { return anti_diagonal_blocks(w.r, w.s); }

std::vector<BigInt> trace_sequence(const IntMatrix& a, std::size_t n) {
  a.require_square();
  std::vector<BigInt> out;
  IntMatrix p = IntMatrix::identity(a.rows());
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * a;
    out.push_back(p.trace());
  }
  return out;
}

Polynomial weighted_char_poly(const IntMatrix& a) {
  // Faddeev-LeVerrier: char poly x^n + c1 x^{n-1} + ... + cn, and
  // det(I - uA) = 1 + c1 u + ... + cn u^n. Every division below is exact.
  a.require_square();
  const std::size_t n = a.rows();
  std::vector<BigInt> coeffs{1};
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const IntMatrix am = a * m;
    const BigInt c = -am.trace() / BigInt(k);
    coeffs.push_back(c);
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
  }
  return Polynomial(std::move(coeffs));
}

std::vector<BigInt> SmithForm::invariant_factors() const {
  std::vector<BigInt> out;
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
  return out;
}

std::size_t SmithForm::zero_count() const {
  return std::min(diagonal.rows(), diagonal.cols()) - invariant_factors().size();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += factor * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
      if (pi == rows) break;
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const BigInt q = d(i, t) / d(t, t);
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const BigInt q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      add_row(d, t, bad_row, 1);
      add_row(u, t, bad_row, 1);
    }
    if (t < rows && t < cols && d(t, t) < 0) {
      add_row(d, t, t, -2);
      add_row(u, t, t, -2);
    }
  }

  SmithForm form{std::move(u), std::move(v), std::move(d)};
  check_smith_form(m, form);
  return form;
}

void check_smith_form(const IntMatrix& m, const SmithForm& form) {
  if (form.u * m * form.v != form.diagonal) throw std::logic_error("smith form: U*M*V != D");
  if (!form.diagonal.is_diagonal()) throw std::logic_error("smith form: D is not diagonal");
  const auto du = determinant(form.u);
  const auto dv = determinant(form.v);
  if (abs(du) != 1 || abs(dv) != 1) throw std::logic_error("smith form: transform is not unimodular");
  const std::size_t k = std::min(form.diagonal.rows(), form.diagonal.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (form.diagonal(i, i) < 0) throw std::logic_error("smith form: negative diagonal entry");
    if (i + 1 < k) {
      const BigInt& a = form.diagonal(i, i);
      const BigInt& b = form.diagonal(i + 1, i + 1);
      const bool divides = a == 0 ? b == 0 : b % a == 0;
      if (!divides) throw std::logic_error("smith form: divisibility chain broken");
    }
  }
}

std::vector<BigInt> BowenFranks::torsion() const {
  std::vector<BigInt> out;
  for (const auto& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

std::string BowenFranks::to_string() const {
  std::ostringstream os;
  os << "factors (";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) os << (i ? "," : "") << invariant_factors[i];
  os << ") free-rank " << free_rank << " det(I-A) " << det << " sign " << (det_sign > 0 ? "+" : det_sign < 0 ? "-" : "0");
  return os.str();
}

BowenFranks bowen_franks(const IntMatrix& a) {
  a.require_square();
  const IntMatrix ima = IntMatrix::identity(a.rows()) - a;
  const SmithForm form = smith_normal_form(ima);
  BowenFranks bf;
  bf.invariant_factors = form.invariant_factors();
  bf.free_rank = form.zero_count();
  bf.det = determinant(ima);
  bf.det_sign = bf.det > 0 ? 1 : bf.det < 0 ? -1 : 0;
  return bf;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::rejected_by_invariant: return "rejected-by-invariant";
    case SearchStatus::none_within_bound: return "none-within-bound";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

struct BudgetExceeded {};

class WitnessSearch {
 public:
  WitnessSearch(const IntMatrix& a, const IntMatrix& b, unsigned bound, std::chrono::milliseconds budget)
      : a_(a), b_(b), m_(a.rows()), n_(b.rows()), bound_(bound),
        deadline_(std::chrono::steady_clock::now() + budget), r_(m_, n_), s_(n_, m_), sr_partial_(n_, n_) {}

  std::optional<SseWitness> run() {
    if (fill_r(0)) return SseWitness{r_, s_, WitnessRoles::a_is_rs};
    return std::nullopt;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  void tick() {
    if ((++nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_) throw BudgetExceeded{};
  }

  // R entries in column-major order; position = col * m + row.
  bool fill_r(std::size_t pos) {
    if (pos == m_ * n_) return r_rows_feasible() && fill_s_column(0);
    const std::size_t i = pos % m_;
    const std::size_t l = pos / m_;
    for (unsigned x = 0; x <= bound_; ++x) {
      tick();
      r_(i, l) = x;
      if (i + 1 == m_ && !r_column_feasible(l)) continue;
      if (fill_r(pos + 1)) return true;
    }
    r_(i, l) = 0;
    return false;
  }

  // B[:, l] = S R[:, l], so a zero column of R forces a zero column of B.
  bool r_column_feasible(std::size_t l) const {
    bool zero = true;
    for (std::size_t i = 0; i < m_; ++i) zero = zero && r_(i, l) == 0;
    if (!zero) return true;
    for (std::size_t j = 0; j < n_; ++j)
      if (b_(j, l) != 0) return false;
    return true;
  }

  // A[i, :] = R[i, :] S, so a zero row of R forces a zero row of A.
  bool r_rows_feasible() const {
    for (std::size_t i = 0; i < m_; ++i) {
      bool zero = true;
      for (std::size_t l = 0; l < n_; ++l) zero = zero && r_(i, l) == 0;
      if (!zero) continue;
      for (std::size_t k = 0; k < m_; ++k)
        if (a_(i, k) != 0) return false;
    }
    return true;
  }

  // Columns of S in order; each column k must solve R S[:, k] = A[:, k].
  bool fill_s_column(std::size_t k) {
    if (k == m_) return sr_partial_ == b_;
    std::vector<BigInt> residual(m_);
    for (std::size_t i = 0; i < m_; ++i) residual[i] = a_(i, k);
    return fill_s_entry(k, 0, residual);
  }

  bool fill_s_entry(std::size_t k, std::size_t j, std::vector<BigInt>& residual) {
    if (j == n_) {
      for (const auto& x : residual)
        if (x != 0) return false;
      // Column k of S contributes S[:, k] R[k, :] to SR; every partial sum is bounded by B.
      bool fits = true;
      for (std::size_t p = 0; p < n_; ++p)
        for (std::size_t q = 0; q < n_; ++q) {
          sr_partial_(p, q) += s_(p, k) * r_(k, q);
          if (sr_partial_(p, q) > b_(p, q)) fits = false;
        }
      bool ok = fits && fill_s_column(k + 1);
      if (!ok) {
        for (std::size_t p = 0; p < n_; ++p)
          for (std::size_t q = 0; q < n_; ++q) sr_partial_(p, q) -= s_(p, k) * r_(k, q);
      }
      return ok;
    }
    for (unsigned x = 0; x <= bound_; ++x) {
      tick();
      bool nonneg = true;
      for (std::size_t i = 0; i < m_; ++i) {
        if (BigInt(x) * r_(i, j) > residual[i]) nonneg = false;
      }
      if (!nonneg) break;  // residuals only shrink as x grows
      s_(j, k) = x;
      for (std::size_t i = 0; i < m_; ++i) residual[i] -= BigInt(x) * r_(i, j);
      const bool ok = fill_s_entry(k, j + 1, residual);
      for (std::size_t i = 0; i < m_; ++i) residual[i] += BigInt(x) * r_(i, j);
      if (ok) return true;
    }
    s_(j, k) = 0;
    return false;
  }

  const IntMatrix& a_;
  const IntMatrix& b_;
  std::size_t m_, n_;
  unsigned bound_;
  std::chrono::steady_clock::time_point deadline_;
  IntMatrix r_, s_, sr_partial_;
  std::size_t nodes_ = 0;
};

}  // namespace

SearchResult search_elementary_sse(const IntMatrix& a, const IntMatrix& b, unsigned entry_bound,
                                   std::chrono::milliseconds budget) {
  a.require_square();
  b.require_square();
  const std::size_t horizon = std::max<std::size_t>({a.rows(), b.rows(), 1});
  const auto ta = trace_sequence(a, horizon);
  const auto tb = trace_sequence(b, horizon);
  for (std::size_t k = 0; k < horizon; ++k) {
    if (ta[k] != tb[k]) {
      return {SearchStatus::rejected_by_invariant, std::nullopt,
              "trace invariant differs: tr A^" + std::to_string(k + 1) + " = " + ta[k].str() + ", tr B^" +
                  std::to_string(k + 1) + " = " + tb[k].str(),
              0};
    }
  }
  if (weighted_char_poly(a) != weighted_char_poly(b)) {
    return {SearchStatus::rejected_by_invariant, std::nullopt, "det(I - uA) differs from det(I - uB)", 0};
  }
  const auto bfa = bowen_franks(a);
  const auto bfb = bowen_franks(b);
  if (!(bfa == bfb)) {
    return {SearchStatus::rejected_by_invariant, std::nullopt,
            "Bowen-Franks invariant differs: " + bfa.to_string() + " vs " + bfb.to_string(), 0};
  }

  WitnessSearch search(a, b, entry_bound, budget);
  try {
    auto witness = search.run();
    if (witness) {
      if (!verify_elementary_sse(a, b, *witness)) throw std::logic_error("search produced an invalid witness");
      return {SearchStatus::found, std::move(witness), "witness found", search.nodes()};
    }
    return {SearchStatus::none_within_bound, std::nullopt,
            "no witness with entries <= " + std::to_string(entry_bound), search.nodes()};
  } catch (const BudgetExceeded&) {
    return {SearchStatus::inconclusive, std::nullopt, "time budget exhausted", search.nodes()};
  }
}

ChainReport verify_sse_chain(const std::vector<ChainStep>& steps) {
  ChainReport report;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    const std::string label = "step " + std::to_string(i + 1);
    const auto& w = step.witness;
    if (w.r.cols() != w.s.rows() || w.r.rows() != w.s.cols()) {
      report.failures.push_back(label + ": R is " + w.r.shape() + " and S is " + w.s.shape());
      return report;
    }
    const IntMatrix rs = w.r * w.s;
    const IntMatrix sr = w.s * w.r;
    const IntMatrix& source_product = w.roles == WitnessRoles::a_is_rs ? rs : sr;
    const IntMatrix& target_product = w.roles == WitnessRoles::a_is_rs ? sr : rs;
    if (source_product != step.from) {
      report.failures.push_back(label + ": starting matrix is not " +
                                (w.roles == WitnessRoles::a_is_rs ? std::string("RS") : std::string("SR")));
    }
    if (i + 1 < steps.size() && steps[i + 1].from != target_product) {
      report.failures.push_back(label + ": result does not match the starting matrix of step " + std::to_string(i + 2));
    }
    report.endpoint = target_product;
  }
  return report;
}

}  // namespace splitgraph
