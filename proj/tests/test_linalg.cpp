#include <random>

#include "doctest.h"
#include "openkh/gf2.hpp"
#include "openkh/intmatrix.hpp"

using namespace openkh;

namespace {
SparseRows random_rows(std::mt19937& rng, size_t r, size_t c, double density) {
  std::bernoulli_distribution bit(density);
  SparseRows rows(r);
  for (auto& row : rows)
    for (uint32_t j = 0; j < c; ++j)
      if (bit(rng)) row.push_back(j);
  return rows;
}
}  // namespace

TEST_CASE("dense rank") {
  BitMatrix m(3, 3);
  m.set(0, 0), m.set(0, 1), m.set(1, 1), m.set(1, 2), m.set(2, 0), m.set(2, 2);
  CHECK(f2_rank(m) == 2);  // rows sum to zero
  BitMatrix id(70, 70);
  for (int i = 0; i < 70; ++i) id.set(i, i);
  CHECK(f2_rank(id) == 70);
}

TEST_CASE("sparse rank agrees with the reference") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    size_t r = 1 + rng() % 120, c = 1 + rng() % 120;
    double dens = (t % 4 == 0) ? 0.5 : 0.04;
    auto rows = random_rows(rng, r, c, dens);
    CHECK(sparse_rank(rows, c) == sparse_rank_reference(rows, c));
  }
  // large and dense enough to hit the dense fallback
  auto big = random_rows(rng, 400, 300, 0.3);
  CHECK(sparse_rank(big, 300) == sparse_rank_reference(big, 300));
  SparseRows dup{{1, 2}, {1, 2}, {}, {0}};
  CHECK(sparse_rank(dup, 3) == 2);
}

TEST_CASE("xor_into") {
  std::vector<uint32_t> a{1, 3, 5};
  xor_into(a, {3, 4});
  CHECK(a == std::vector<uint32_t>{1, 4, 5});
}

TEST_CASE("smith normal form") {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m(r, c);
    for (auto& x : m.a) x = static_cast<int64_t>(rng() % 7) - 3;
    auto s = smith_normal_form(m);
    auto d = s.left * m * s.right;
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) CHECK(d(i, j) == (i == j ? s.diag[i] : 0));
    for (size_t i = 0; i + 1 < s.diag.size(); ++i)
      if (s.diag[i + 1]) CHECK(s.diag[i + 1] % s.diag[i] == 0);
  }
}

TEST_CASE("determinant") {
  IntMatrix m(3, 3);
  m.a = {2, -1, 0, -1, 2, -1, 0, -1, 2};  // A3 Cartan
  CHECK(determinant(m) == 4);
  IntMatrix z(2, 2);
  CHECK(determinant(z) == 0);
  // exact beyond 64 bits
  IntMatrix big = IntMatrix::identity(4);
  for (int i = 0; i < 4; ++i) big(i, i) = int64_t{1} << 40;
  CHECK(determinant(big) == BigInt(1) << 160);
}
