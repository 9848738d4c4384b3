#include "oracles.hpp"

#include <functional>

namespace oracle {

namespace {

template <class T, class Get>
T expand(std::size_t n, Get get, std::vector<std::size_t>& rows_left, std::size_t col) {
  if (col == n) return T(std::vector<BigInt>{1});
  T total;
  int sign = 1;
  for (std::size_t i = 0; i < rows_left.size(); ++i) {
    const std::size_t r = rows_left[i];
    rows_left.erase(rows_left.begin() + static_cast<long>(i));
    T minor = expand<T>(n, get, rows_left, col + 1);
    rows_left.insert(rows_left.begin() + static_cast<long>(i), r);
    T term = get(r, col) * minor;
    total = sign > 0 ? total + term : total - term;
    sign = -sign;
  }
  return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

Polynomial laplace_char_poly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  auto get = [&](std::size_t i, std::size_t j) {
    return Polynomial(std::vector<BigInt>{BigInt(i == j ? 1 : 0), BigInt(-a(i, j))});
  };
  return expand<Polynomial>(n, get, rows, 0);
}

BigInt laplace_det(const IntMatrix& m) {
  const auto p = [&] {
    const std::size_t n = m.rows();
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    auto get = [&](std::size_t i, std::size_t j) { return Polynomial(std::vector<BigInt>{m(i, j)}); };
    return expand<Polynomial>(n, get, rows, 0);
  }();
  return p.coefficient(0);
}

std::vector<BigInt> determinantal_factors(const IntMatrix& m) {
  std::vector<BigInt> factors;
  BigInt previous = 1;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= limit; ++k) {
    BigInt g = 0;
    for (const auto& rs : subsets(m.rows(), k)) {
      for (const auto& cs : subsets(m.cols(), k)) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        g = gcd(g, abs(laplace_det(sub)));
      }
    }
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

BigInt closed_path_count(const splitgraph::DirectedGraph& g, std::size_t n) {
  BigInt count = 0;
  for (const auto& p : splitgraph::paths(g, n))
    if (g.range(p.front()) == g.source(p.back())) ++count;
  return count;
}

IntMatrix brute_adjacency(const splitgraph::DirectedGraph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) a(e.source, e.range) += 1;
  return a;
}

}  // namespace oracle
