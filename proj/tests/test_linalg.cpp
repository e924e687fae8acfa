#include <random>

#include "doctest.h"
#include "stz/linalg.hpp"

using namespace stz;

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMat random_matrix(std::mt19937_64& rng, int rows, int cols, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("rref and rank") {
  IntMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  CHECK(rank(IntMat::identity(5)) == 5);
}

TEST_CASE("solve consistent and inconsistent systems") {
  IntMat a = from_rows({{2, 0}, {0, 3}});
  IntMat b = from_rows({{4}, {9}});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0, 0) == 2);
  CHECK((*x)(1, 0) == 3);

  IntMat bad_a = from_rows({{1, 1}, {1, 1}});
  IntMat bad_b = from_rows({{0}, {1}});
  CHECK(!solve(bad_a, bad_b).has_value());
}

TEST_CASE("integer kernel is primitive and annihilates") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    IntMat a = random_matrix(rng, 3, 6);
    IntMat k = int_kernel(a);
    CHECK((a * k).is_zero());
    CHECK(k.cols() == 6 - rank(a));
    // primitivity: the kernel lattice is saturated
    if (k.cols() > 0) CHECK(saturate(k) .cols() == k.cols());
  }
}

TEST_CASE("smith form diagonalizes with unimodular transforms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat a = random_matrix(rng, 4, 5);
    SmithForm f = smith_form(a);
    CHECK(f.u * a * f.v == f.s);
    Int du = det(f.u), dv = det(f.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (int i = 0; i < f.s.rows(); ++i)
      for (int j = 0; j < f.s.cols(); ++j)
        if (i != j) CHECK(f.s(i, j) == 0);
  }
}

TEST_CASE("determinant by Bareiss matches cofactor on small cases") {
  CHECK(det(from_rows({{3}})) == 3);
  CHECK(det(from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(det(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det(IntMat::identity(6)) == 1);
  CHECK(det(from_rows({{2, 0, 0}, {0, 0, 1}, {0, 1, 0}})) == -2);
}

TEST_CASE("characteristic polynomial: identity and companion checks") {
  std::vector<Int> p = char_poly(IntMat::identity(3));
  // (x-1)^3 = x^3 - 3x^2 + 3x - 1
  CHECK(p == std::vector<Int>({Int(-1), Int(3), Int(-3), Int(1)}));

  // companion matrix of x^2 - 5x + 6
  IntMat c = from_rows({{0, -6}, {1, 5}});
  CHECK(char_poly(c) == std::vector<Int>({Int(6), Int(-5), Int(1)}));
}

TEST_CASE("characteristic polynomial matches determinant and trace") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat a = random_matrix(rng, 5, 5);
    std::vector<Int> p = char_poly(a);
    REQUIRE(p.size() == 6);
    CHECK(p[5] == 1);
    CHECK(p[4] == -a.trace());
    // det(xI - A) at x = 0 is (-1)^n det A
    CHECK(p[0] == ((5 % 2) ? -det(a) : det(a)));
  }
}

TEST_CASE("saturation recovers a primitive superlattice") {
  // span of (2, 0), (0, 3) saturates to all of Z^2
  IntMat a = from_rows({{2, 0}, {0, 3}});
  CHECK(saturate(a).cols() == 2);
  CHECK(abs(det(saturate(a))) == 1);

  // rank-1 example: (2, 4) saturates to (1, 2)
  IntMat b = from_rows({{2}, {4}});
  IntMat s = saturate(b);
  REQUIRE(s.cols() == 1);
  CHECK(abs(s(0, 0)) == 1);
  CHECK(abs(s(1, 0)) == 2);
}

TEST_CASE("polynomial helpers") {
  std::vector<Int> xm1 = {Int(-1), Int(1)};
  std::vector<Int> sq = poly_pow(xm1, 2);
  CHECK(sq == std::vector<Int>({Int(1), Int(-2), Int(1)}));
  CHECK(poly_to_string(sq) == "x^2 - 2x + 1");
  CHECK(poly_to_string(poly_mul(xm1, {Int(1), Int(1)})) == "x^2 - 1");
}
