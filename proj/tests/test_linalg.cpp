#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "surfgenus/cohomology.hpp"
#include "surfgenus/error.hpp"
#include "surfgenus/fixtures.hpp"
#include "surfgenus/linalg.hpp"

using namespace surfgenus;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("rank: small cases") {
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(RationalMatrix(4, 5)) == 0);
  CHECK(rank(RationalMatrix(0, 0)) == 0);
  // delta0 of the tetrahedron: V - #components
  CHECK(rank(coboundary_matrices(tetrahedron()).delta0) == 3);
}

TEST_CASE("RationalMatrix rejects a wrong entry count") {
  CHECK_THROWS_AS(RationalMatrix(2, 2, std::vector<Rational>(3)), SurfaceError);
}

TEST_CASE("kernel_basis: small cases") {
  CHECK(kernel_basis(RationalMatrix::identity(2)).empty());
  CHECK(kernel_basis(RationalMatrix(1, 3)).size() == 3);

  const auto torus = torus7();
  const auto d1 = coboundary_matrices(torus).delta1;
  CHECK(d1.rows() == 14);
  CHECK(d1.cols() == 21);
  // 21 - rank(delta1) with rank(delta1) = 13 computed mod p
  const std::vector<Triangle> tris(torus.triangles().begin(), torus.triangles().end());
  CHECK(oracle::rank_mod_p(oracle::coboundaries_mod_p(oracle::raw_complex(tris)).d1) == 13);
  const auto basis = kernel_basis(d1);
  CHECK(basis.size() == 8);
  for (const auto& v : basis) {
    const auto image = d1 * v;
    CHECK(std::all_of(image.begin(), image.end(), [](const Rational& q) { return sgn(q) == 0; }));
  }
}

TEST_CASE("intersection_dim") {
  const std::vector<RationalVector> e1{vec({1, 0})}, e2{vec({0, 1})};
  CHECK(intersection_dim(e1, e2) == 0);
  const std::vector<RationalVector> plane{vec({1, 0}), vec({0, 1})};
  CHECK(intersection_dim(plane, plane) == 2);

  const std::vector<RationalVector> a{vec({1, 0, 0}), vec({1, 1, 0})};
  const std::vector<RationalVector> b{vec({0, 1, 0}), vec({0, 0, 1})};
  CHECK(intersection_dim(a, b) == 1);

  const std::vector<RationalVector> bad{vec({1, 0, 0})};
  CHECK_THROWS_AS(intersection_dim(e1, bad), SurfaceError);
  CHECK(intersection_dim(e1, std::vector<RationalVector>{}) == 0);
}

TEST_CASE("rank agrees with an independent fraction-free elimination") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    const auto m = oracle::random_matrix(rng, dim(rng), dim(rng), trial % 3 == 0 ? 0.8 : 0.4);
    CHECK(rank(m) == oracle::rank_bareiss(m));
  }
}

TEST_CASE("properties on random rational matrices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    // low-rank products exercise rank deficiency
    const auto m = trial % 2 == 0 ? oracle::random_matrix(rng, dim(rng), dim(rng))
                                  : oracle::random_matrix(rng, dim(rng), 2) * oracle::random_matrix(rng, 2, dim(rng));
    const std::size_t r = rank(m);
    CHECK(r == rank(m.transpose()));

    const auto basis = kernel_basis(m);
    CHECK(r + basis.size() == m.cols());
    for (const auto& v : basis) CHECK((m * v) == RationalVector(m.rows()));
    CHECK(span_dim(basis, m.cols()) == basis.size());

    // exact: rescaling and repetition give identical answers
    CHECK(rank(m.scaled(Rational(-7, 3))) == r);
    CHECK(rank(m) == r);

    std::vector<RationalVector> rows_a, rows_b;
    for (std::size_t i = 0; i < m.rows(); ++i) (i % 2 ? rows_a : rows_b).emplace_back(m.row(i).begin(), m.row(i).end());
    const auto ab = intersection_dim(rows_a, rows_b);
    CHECK(ab == intersection_dim(rows_b, rows_a));
    CHECK(ab <= std::min(span_dim(rows_a, m.cols()), span_dim(rows_b, m.cols())));
  }
}

TEST_CASE("coefficient growth stays exact on dense integer matrices") {
  // Hilbert-like matrix: full rank with growing denominators.
  const std::size_t n = 12;
  RationalMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = Rational(1, static_cast<unsigned long>(i + j + 1));
  CHECK(rank(h) == n);
  CHECK(kernel_basis(h).empty());
  // dropping independence: last row = sum of two others
  for (std::size_t j = 0; j < n; ++j) h(n - 1, j) = h(0, j) + h(1, j);
  CHECK(rank(h) == n - 1);
  const auto k = kernel_basis(h.transpose());
  REQUIRE(k.size() == 1);
  CHECK((h.transpose() * k[0]) == RationalVector(n));
}
