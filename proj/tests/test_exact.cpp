#include <catch2/catch_amalgamated.hpp>

#include "nicepar/exact.hpp"
#include "nicepar/oracle.hpp"

using namespace nicepar;

TEST_CASE("rank of simple matrices") {
  ExactMatrix z(4, 6);
  CHECK(z.rank() == 0);
  CHECK(z.nullity() == 6);
  CHECK(ExactMatrix::identity(5).rank() == 5);

  ExactMatrix m(2, 2);
  m.at(0, 0) = mpq_class(1, 3);
  m.at(0, 1) = mpq_class(2, 3);
  m.at(1, 0) = mpq_class(1, 2);
  m.at(1, 1) = 1;  // second row is 3/2 times the first
  CHECK(m.rank() == 1);
}

TEST_CASE("rank is invariant under known factorizations") {
  // A (6x3) * B (3x6) has rank exactly 3 when both factors have full rank.
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    ExactMatrix a(6, 3), b(3, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = rng.coefficient();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 6; ++j) b.at(i, j) = rng.coefficient();
    if (a.rank() == 3 && b.rank() == 3) CHECK((a * b).rank() == 3);
  }
}

TEST_CASE("rank of a nilpotent Jordan block") {
  int n = 7;
  ExactMatrix j(n, n);
  for (int i = 0; i + 1 < n; ++i) j.at(i, i + 1) = 1;
  auto ranks = matrix_power_ranks(j, n + 1);
  REQUIRE(ranks.size() == static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) CHECK(ranks[p - 1] == n - p);
}

TEST_CASE("transpose and product shapes") {
  ExactMatrix a(2, 3);
  a.at(0, 2) = 5;
  ExactMatrix t = a.transpose();
  CHECK(t.rows() == 3);
  CHECK(t.at(2, 0) == 5);
  CHECK_THROWS_AS(a * a, error);
}
