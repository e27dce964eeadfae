#include <doctest.h>

#include <random>

#include "pgv/fp_linalg.hpp"
#include "oracles.hpp"

using namespace pgv;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, std::uint32_t p, std::size_t r, std::size_t c) {
  FpMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Residue(rng() % p);
  // make some rows dependent
  if (r > 2) {
    Vec a = m.row_vec(0);
    axpy(a, 1, m.row(1), p);
    std::copy(a.begin(), a.end(), m.row(r - 1).begin());
  }
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u})
    for (Residue a = 1; a < p; ++a) CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
  CHECK(fp_pow(3, 4, 7) == 4);
  CHECK_THROWS_AS(require_prime(9), Error);
  CHECK_THROWS_AS(fp_inv(0, 5), Error);
}

TEST_CASE("kernel size matches enumeration") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u})
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
      FpMatrix m = random_matrix(rng, p, r, c);
      std::size_t count = 0;
      oracle::for_each_vector(p, c, [&](const Vec& v) {
        count += is_zero(m.right_apply(v));
        return true;
      });
      FpSubspace k = kernel(m);
      CHECK(count == oracle::ipow(p, k.dim()));
      CHECK(k.dim() + rank(m) == c);
      for (const auto& v : k.basis()) CHECK(is_zero(m.right_apply(v)));
      CHECK(left_kernel(m).dim() + rank(m) == r);
    }
}

TEST_CASE("solve finds a solution exactly when one exists") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t p = trial % 2 ? 3 : 5;
    FpMatrix a = random_matrix(rng, p, 3, 3);
    Vec b(3);
    for (auto& x : b) x = Residue(rng() % p);
    bool exists = false;
    oracle::for_each_vector(p, 3, [&](const Vec& x) {
      exists = a.right_apply(x) == b;
      return !exists;
    });
    auto x = solve(a, b);
    CHECK(x.has_value() == exists);
    if (x) CHECK(a.right_apply(*x) == b);
  }
}

TEST_CASE("subspace sum and intersection dimensions") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t p = 3;
    FpSubspace u = row_space(random_matrix(rng, p, 2 + rng() % 3, 6));
    FpSubspace w = row_space(random_matrix(rng, p, 2 + rng() % 3, 6));
    FpSubspace s = u.sum(w), i = u.intersect(w);
    CHECK(s.dim() + i.dim() == u.dim() + w.dim());
    CHECK(s.contains(u));
    CHECK(u.contains(i));
    CHECK(w.contains(i));
    CHECK(s.quotient_dim(u) == s.dim() - u.dim());
    for (const auto& v : u.basis()) {
      auto c = u.coordinates(v);
      REQUIRE(c);
    }
  }
}

TEST_CASE("rref is canonical") {
  FpMatrix a = FpMatrix::from_rows(5, 3, {{1, 2, 3}, {2, 4, 1}, {3, 1, 4}});
  FpMatrix b = FpMatrix::from_rows(5, 3, {{3, 1, 4}, {1, 2, 3}, {0, 0, 0}});
  CHECK(rank(FpMatrix::from_rows(5, 3, {{1, 2, 3}, {0, 1, 1}, {1, 3, 4}})) == 2);
  // every row of a is a multiple of (1, 2, 3)
  CHECK(rref(a).rank == 1);
  CHECK(rref(b).rank == 1);
  CHECK(rref(b).reduced.row_vec(0) == Vec{1, 2, 3});
  CHECK(row_space(a) == row_space(FpMatrix::from_rows(5, 3, {{2, 4, 1}})));
}

TEST_CASE("matrix products") {
  FpMatrix a = FpMatrix::from_rows(7, 2, {{1, 2}, {3, 4}});
  FpMatrix i = FpMatrix::identity(7, 2);
  CHECK(a * i == a);
  CHECK((a * a)(0, 0) == 0);  // 1 + 6 = 7
  CHECK(a.transpose()(0, 1) == 3);
  CHECK(a.left_apply(Vec{1, 0}) == Vec{1, 2});
  CHECK(a.right_apply(Vec{1, 0}) == Vec{1, 3});
}
