#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "splitgraph/numeric.hpp"

using namespace splitgraph;

TEST_CASE("matrix products and shapes") {
  IntMatrix a{{1, 1}, {2, 0}};
  CHECK(a * a == IntMatrix{{3, 1}, {2, 2}});
  CHECK(a.power(0) == IntMatrix::identity(2));
  CHECK(a.power(3) == IntMatrix{{5, 3}, {6, 2}});
  CHECK(a.trace() == 1);
  CHECK(a.entry_sum() == 4);
  CHECK(a.transpose() == IntMatrix{{1, 2}, {1, 0}});

  IntMatrix r(3, 2), s(2, 3);
  CHECK((r * s).shape() == "3x3");
  CHECK((s * r).shape() == "2x2");
  CHECK_THROWS_AS(r * r, DimensionError);
  CHECK_THROWS_AS(r.trace(), DimensionError);
  CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), DimensionError);
}

TEST_CASE("zero-sized matrices") {
  IntMatrix empty(0, 0);
  CHECK(determinant(empty) == 1);
  CHECK((IntMatrix(2, 0) * IntMatrix(0, 3)).is_zero());
  CHECK(rank(to_rational(IntMatrix(0, 4))) == 0);
}

TEST_CASE("block helpers") {
  IntMatrix r{{1, 2, 3}};
  IntMatrix s{{4}, {5}, {6}};
  IntMatrix z = anti_diagonal_blocks(r, s);
  CHECK(z.shape() == "4x4");
  CHECK(z(0, 3) == 3);
  CHECK(z(3, 0) == 6);
  CHECK(z(0, 0) == 0);
  CHECK(z * z == block_diagonal(r * s, s * r));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    CHECK(determinant(m) == oracle::laplace_det(m));
    CHECK((rank(to_rational(m)) == n) == (determinant(m) != 0));
  }
}

TEST_CASE("rank") {
  CHECK(rank(to_rational(IntMatrix{{1, 2}, {2, 4}})) == 1);
  CHECK(rank(to_rational(IntMatrix{{1, 0, 1}, {0, 1, 1}})) == 2);
  CHECK(rank(to_rational(IntMatrix(3, 3))) == 0);
}

TEST_CASE("polynomial arithmetic and printing") {
  Polynomial p({1, -1, -2});
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "1 - u - 2u^2");
  CHECK(Polynomial({0, 0}).degree() == -1);
  CHECK((p - p) == Polynomial());
  CHECK((Polynomial({1, 1}) * Polynomial({1, -1})) == Polynomial({1, 0, -1}));
  CHECK(Polynomial().to_string() == "0");
}

TEST_CASE("matrix printing") {
  std::ostringstream os;
  os << IntMatrix{{1, 1}, {2, 0}};
  CHECK(os.str() == "[[1,1],[2,0]]");
}
