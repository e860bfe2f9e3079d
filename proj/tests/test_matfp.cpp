#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "argen/matfp.hpp"

using namespace argen;

TEST_CASE("prime field arithmetic") {
  PrimeField f5(5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.neg(2) == 3);
  CHECK(f5.mul(3, 4) == 2);
  for (std::uint32_t a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);
  CHECK(f5.residue(-7) == 3);
  CHECK(f5.residue(12) == 2);
  CHECK(PrimeField::is_prime(2));
  CHECK(PrimeField::is_prime(97));
  CHECK_FALSE(PrimeField::is_prime(1));
  CHECK_FALSE(PrimeField::is_prime(91));
  CHECK_THROWS(PrimeField(4));
}

static Mat make(std::size_t r, std::size_t c, std::uint32_t p,
                std::initializer_list<long long> vals) {
  Mat m(r, c, p);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, *it++);
  return m;
}

TEST_CASE("rref matches a hand-reduced matrix") {
  // over F_3: [[1,2,0],[2,1,1]] -> [[1,2,0],[0,0,1]]
  Mat m = make(2, 3, 3, {1, 2, 0, 2, 1, 1});
  RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  CHECK(r.reduced == make(2, 3, 3, {1, 2, 0, 0, 0, 1}));
}

TEST_CASE("solve and nullspace") {
  Mat a = make(3, 3, 7, {1, 2, 3, 2, 4, 6, 0, 1, 1});
  CHECK(rank(a) == 2);
  Mat ns = nullspace(a);
  CHECK(ns.cols() == 1);
  CHECK((a * ns).is_zero());

  Mat b = a.col(0) + a.col(2).scaled(3);
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  // inconsistent system
  Mat bad = make(3, 1, 7, {1, 1, 0});
  CHECK_FALSE(solve(a, bad).has_value());
}

TEST_CASE("inverse round-trip and pow") {
  Mat a = make(2, 2, 5, {1, 2, 3, 4});
  REQUIRE(is_invertible(a));
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Mat::identity(2, 5));
  CHECK(a.pow(0) == Mat::identity(2, 5));
  CHECK(a.pow(3) == a * a * a);

  Mat sing = make(2, 2, 5, {1, 2, 2, 4});
  CHECK_FALSE(is_invertible(sing));
  CHECK_FALSE(inverse(sing).has_value());
}

TEST_CASE("stacking, slicing, flattening") {
  Mat a = make(2, 2, 3, {1, 2, 0, 1});
  Mat b = make(2, 1, 3, {2, 2});
  Mat h = a.hstacked(b);
  CHECK(h.cols() == 3);
  CHECK(h.col(2) == b);
  CHECK(h.cols_slice(0, 2) == a);
  Mat v = a.vstacked(a);
  CHECK(v.rows() == 4);
  CHECK(v.rows_slice(2, 2) == a);

  Mat flat = a.flattened();
  CHECK(flat.rows() == 1);
  CHECK(Mat::unflatten(flat, 2, 2) == a);
}

TEST_CASE("column space spans the image") {
  Mat a = make(3, 3, 2, {1, 1, 0, 0, 0, 0, 1, 1, 1});
  Mat cs = column_space(a);
  CHECK(cs.cols() == rank(a));
  for (std::size_t j = 0; j < a.cols(); ++j)
    CHECK(solve(cs, a.col(j)).has_value());
}

TEST_CASE("degenerate shapes") {
  Mat e(0, 3, 2);
  CHECK(rank(e) == 0);
  CHECK(nullspace(e).cols() == 3);
  Mat e2(3, 0, 2);
  CHECK((e * Mat(3, 2, 2)).rows() == 0);
  CHECK(rank(e2) == 0);
}
