#include "splitgraph/circle.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace splitgraph {

namespace {

Rational fractional_part(const Rational& x) {
  const BigInt n = boost::multiprecision::numerator(x);
  const BigInt d = boost::multiprecision::denominator(x);
  BigInt r = n % d;
  if (r < 0) r += d;
  return Rational(r, d);
}

long long abs_ll(long long x) { return x < 0 ? -x : x; }

}  // namespace

RationalAngle::RationalAngle(const Rational& turns) : value_(fractional_part(turns)) {}

RationalAngle::RationalAngle(long long p, long long q) {
  if (q == 0) throw std::invalid_argument("angle with zero denominator");
  value_ = fractional_part(Rational(p) / q);
}

BigInt RationalAngle::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt RationalAngle::denominator() const { return boost::multiprecision::denominator(value_); }

RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) { return RationalAngle(a.value_ + b.value_); }
RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) { return RationalAngle(a.value_ - b.value_); }
RationalAngle operator*(long long k, const RationalAngle& a) { return RationalAngle(Rational(k) * a.value_); }

std::string RationalAngle::to_string() const {
  if (value_ == 0) return "0";
  return numerator().str() + "/" + denominator().str();
}

void validate(const CircleGraph& g) {
  if (g.r.size() != g.edge_components || g.s.size() != g.edge_components) {
    throw std::invalid_argument("circle graph maps must have one piece per edge component");
  }
  for (const CircleMap* m : {&g.r, &g.s})
    for (const auto& piece : *m) {
      if (piece.exponent == 0) throw std::invalid_argument("circle map exponent must be nonzero");
      if (piece.target >= g.vertex_components) throw std::invalid_argument("circle map target out of range");
    }
}

CircleGraph power_circle_graph(long long m, long long n) {
  CircleGraph g{1, 1, {CirclePiece{0, m, {}}}, {CirclePiece{0, n, {}}}};
  validate(g);
  return g;
}

long long component_count(long long k1, long long k2) {
  if (k1 == 0 || k2 == 0) throw std::invalid_argument("component_count requires nonzero exponents");
  return std::gcd(abs_ll(k1), abs_ll(k2));
}

std::pair<RationalAngle, RationalAngle> FibredProduct::point(std::size_t component, const RationalAngle& theta) const {
  const auto& [eta1, eta2] = offsets.at(component);
  return {q2 * theta + eta1, q1 * theta + eta2};
}

bool FibredProduct::contains(const RationalAngle& t1, const RationalAngle& t2) const {
  return f.target == g.target && f(t1) == g(t2);
}

FibredProduct fibred_product(const CirclePiece& f, const CirclePiece& g, Presentation p) {
  if (f.exponent == 0 || g.exponent == 0) throw std::invalid_argument("fibred product of a zero exponent");
  if (f.target != g.target) throw std::invalid_argument("fibred product of maps into different components");
  FibredProduct fp{f, g, component_count(f.exponent, g.exponent), 1, 1, {}};
  fp.q1 = f.exponent / fp.d;
  fp.q2 = g.exponent / fp.d;
  // k1 eta1 - k2 eta2 = c (mod 1).
  const Rational c = (g.rotation - f.rotation).turns();
  for (long long l = 0; l < fp.d; ++l) {
    std::pair<RationalAngle, RationalAngle> eta;
    if (p == Presentation::pi) {
      eta = {RationalAngle(), RationalAngle(-c / g.exponent + Rational(l, abs_ll(g.exponent)))};
    } else {
      eta = {RationalAngle(c / f.exponent + Rational(l, abs_ll(f.exponent))), RationalAngle()};
    }
    if (!fp.contains(eta.first, eta.second)) throw std::logic_error("fibred product offset does not solve the congruence");
    fp.offsets.push_back(eta);
  }
  return fp;
}

std::string GridReport::to_string() const {
  std::ostringstream os;
  os << "grid Q=" << q << ": " << solutions << " solutions, " << covered_once << " covered exactly once, " << orbits
     << " tangent orbits\n";
  for (const auto& f : failures) os << "  " << f << '\n';
  os << (passed() ? "PASS" : "FAIL") << " grid verification\n";
  return os.str();
}

GridReport verify_parametrization(const FibredProduct& product, long long q) {
  if (q <= 0) throw std::invalid_argument("grid denominator must be positive");
  GridReport report;
  report.q = q;
  const std::size_t side = static_cast<std::size_t>(q);
  std::vector<bool> is_solution(side * side, false);

  // Integer test when the rotation offset lies on the grid.
  const Rational c = (product.g.rotation - product.f.rotation).turns() * q;
  const bool integral = boost::multiprecision::denominator(c) == 1;
  const long long cq = integral ? static_cast<long long>(boost::multiprecision::numerator(c)) : 0;
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b) {
      bool sol;
      if (integral) {
        long long r = (product.f.exponent * a - product.g.exponent * b - cq) % q;
        sol = r == 0;
      } else {
        sol = product.contains(RationalAngle(a, q), RationalAngle(b, q));
      }
      if (!sol) continue;
      is_solution[static_cast<std::size_t>(a) * side + static_cast<std::size_t>(b)] = true;
      ++report.solutions;

      const RationalAngle t1(a, q), t2(b, q);
      std::size_t hits = 0;
      for (std::size_t l = 0; l < product.components(); ++l)
        for (long long j = 0; j < abs_ll(product.q2); ++j) {
          const RationalAngle theta((t1 - product.offsets[l].first).turns() / product.q2 + Rational(j) / product.q2);
          if (product.point(l, theta) == std::make_pair(t1, t2)) ++hits;
        }
      if (hits == 1) {
        ++report.covered_once;
      } else {
        report.failures.push_back("solution (" + t1.to_string() + ", " + t2.to_string() + ") is hit " +
                                  std::to_string(hits) + " times");
      }
    }

  for (std::size_t l = 0; l < product.components(); ++l)
    for (long long t = 0; t < q; ++t) {
      const auto [t1, t2] = product.point(l, RationalAngle(t, q));
      if (!product.contains(t1, t2)) {
        report.failures.push_back("component " + std::to_string(l) + " at " + RationalAngle(t, q).to_string() +
                                  " is not a solution");
      }
    }

  std::vector<std::size_t> parent(side * side);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto wrap = [q](long long x) { return static_cast<std::size_t>(((x % q) + q) % q); };
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b) {
      const std::size_t here = static_cast<std::size_t>(a) * side + static_cast<std::size_t>(b);
      if (!is_solution[here]) continue;
      const std::size_t next = wrap(a + product.q2) * side + wrap(b + product.q1);
      if (!is_solution[next]) {
        report.failures.push_back("tangent step leaves the solution set");
        continue;
      }
      parent[find(here)] = find(next);
    }
  for (std::size_t i = 0; i < side * side; ++i)
    if (is_solution[i] && find(i) == i) ++report.orbits;
  if (report.orbits != product.components()) {
    report.failures.push_back("grid has " + std::to_string(report.orbits) + " tangent orbits but the product has " +
                              std::to_string(product.components()) + " components");
  }
  return report;
}

namespace {

void require_one_component(const CircleGraph& e) {
  validate(e);
  if (e.vertex_components != 1 || e.edge_components != 1) {
    throw std::invalid_argument("circle splits are defined for one vertex and one edge circle");
  }
}

}  // namespace

CircleSplit circle_in_split(const CircleGraph& e, long long a, long long b, Presentation p) {
  require_one_component(e);
  if (a == 0 || b == 0 || a * b != e.r[0].exponent) throw std::invalid_argument("in-split requires a b = m");
  const CirclePiece alpha{0, b, e.r[0].rotation};
  CircleSplit out{fibred_product(e.s[0], alpha, p), {}};
  const auto& fp = out.product;
  out.graph.vertex_components = 1;
  out.graph.edge_components = fp.components();
  for (std::size_t l = 0; l < fp.components(); ++l) {
    // (edge, y) with r_I = psi(edge) = a * edge and s_I = y.
    out.graph.r.push_back({0, a * fp.q2, a * fp.offsets[l].first});
    out.graph.s.push_back({0, fp.q1, fp.offsets[l].second});
  }
  validate(out.graph);
  return out;
}

CircleSplit circle_out_split(const CircleGraph& e, long long a, long long b, Presentation p) {
  require_one_component(e);
  if (a == 0 || b == 0 || a * b != e.s[0].exponent) throw std::invalid_argument("out-split requires a b = n");
  const CirclePiece alpha{0, b, e.s[0].rotation};
  CircleSplit out{fibred_product(e.r[0], alpha, p), {}};
  const auto& fp = out.product;
  out.graph.vertex_components = 1;
  out.graph.edge_components = fp.components();
  for (std::size_t l = 0; l < fp.components(); ++l) {
    // (y, edge) with r_O = y and s_O = psi(edge) = a * edge.
    out.graph.r.push_back({0, fp.q1, fp.offsets[l].second});
    out.graph.s.push_back({0, a * fp.q2, a * fp.offsets[l].first});
  }
  validate(out.graph);
  return out;
}

namespace {

bool pieces_match(const CirclePiece& r, const CirclePiece& s, const CirclePiece& r2, const CirclePiece& s2) {
  if (r.target != r2.target || s.target != s2.target) return false;
  if (r.exponent != r2.exponent || s.exponent != s2.exponent) return false;
  // Need t with k_r t = rot_r - rot_r2 and k_s t = rot_s - rot_s2.
  const Rational delta = (r.rotation - r2.rotation).turns();
  for (long long j = 0; j < abs_ll(r.exponent); ++j) {
    const RationalAngle t((delta + j) / r.exponent);
    if (r2(t) == r.rotation && s2(t) == s.rotation) return true;
  }
  return false;
}

}  // namespace

bool presentations_isomorphic(const CircleGraph& x, const CircleGraph& y) {
  validate(x);
  validate(y);
  if (x.vertex_components != y.vertex_components || x.edge_components != y.edge_components) return false;
  const std::size_t n = x.edge_components;
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t l) {
    if (l == n) return true;
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k] || !pieces_match(x.r[l], x.s[l], y.r[k], y.s[k])) continue;
      used[k] = true;
      if (assign(l + 1)) return true;
      used[k] = false;
    }
    return false;
  };
  return assign(0);
}

std::string describe(const CircleGraph& g, const std::string& label) {
  std::ostringstream os;
  os << label << ": " << g.vertex_components << " vertex circle(s), " << g.edge_components << " edge circle(s)\n";
  for (std::size_t l = 0; l < g.edge_components; ++l) {
    os << "  l=" << l << "  r: " << g.r[l].exponent << "*t + " << g.r[l].rotation.to_string() << " -> "
       << g.r[l].target << "  s: " << g.s[l].exponent << "*t + " << g.s[l].rotation.to_string() << " -> "
       << g.s[l].target << '\n';
  }
  return os.str();
}

std::optional<CircleGraph> reference_in_split_presentation(long long m, long long n, long long a, long long b) {
  if (m != 2 || n != 2 || a != 1 || b != 2) return std::nullopt;
  CircleGraph g{1, 2, {}, {}};
  for (long long l = 0; l < 2; ++l) {
    g.r.push_back({0, 2, RationalAngle(l, 2)});
    g.s.push_back({0, 2, RationalAngle()});
  }
  return g;
}

}  // namespace splitgraph
