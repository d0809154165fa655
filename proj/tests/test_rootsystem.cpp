#include <catch2/catch_amalgamated.hpp>

#include "nicepar/oracle.hpp"
#include "nicepar/rootsystem.hpp"

using namespace nicepar;

TEST_CASE("root counts match the classical formulas") {
  CHECK(RootSystem(LieType::A, 4).num_positive() == 10);
  CHECK(RootSystem(LieType::B, 3).num_positive() == 9);
  CHECK(RootSystem(LieType::C, 4).num_positive() == 16);
  CHECK(RootSystem(LieType::D, 5).num_positive() == 20);
  CHECK(RootSystem(LieType::G2, 2).num_roots() == 12);
  CHECK(RootSystem(LieType::F4, 4).num_roots() == 48);
  CHECK(RootSystem(LieType::E6, 6).num_roots() == 72);
  CHECK(RootSystem(LieType::E7, 7).num_roots() == 126);
  CHECK(RootSystem(LieType::E8, 8).num_roots() == 240);
  CHECK(RootSystem(LieType::E8, 8).dim() == 248);
}

TEST_CASE("roots are closed under negation and have valid norms") {
  for (auto t : {LieType::B, LieType::G2, LieType::F4}) {
    RootSystem rs(t, t == LieType::B ? 4 : exceptional_rank(t));
    for (int k = 0; k < rs.num_roots(); ++k) {
      std::vector<int> m = rs.root(k);
      for (int& x : m) x = -x;
      CHECK(rs.index_of(m) == rs.neg(k));
      CHECK((rs.norm2(k) == 2 || rs.norm2(k) == 4 || rs.norm2(k) == 6));
    }
  }
}

namespace {

/// Exact Jacobi check on a triple of basis elements.
bool jacobi_holds(const RootSystem& rs, int a, int b, int c) {
  auto eb = [&](int i) {
    RootSystem::Elem e;
    e[i] = 1;
    return e;
  };
  auto add = [](RootSystem::Elem x, const RootSystem::Elem& y) {
    for (const auto& [k, v] : y) {
      x[k] += v;
      if (x[k] == 0) x.erase(k);
    }
    return x;
  };
  RootSystem::Elem t1 = rs.bracket(rs.bracket(eb(a), eb(b)), eb(c));
  RootSystem::Elem t2 = rs.bracket(rs.bracket(eb(b), eb(c)), eb(a));
  RootSystem::Elem t3 = rs.bracket(rs.bracket(eb(c), eb(a)), eb(b));
  return add(add(t1, t2), t3).empty();
}

}  // namespace

TEST_CASE("Jacobi identity on random basis triples, exceptional types") {
  for (auto t : {LieType::G2, LieType::F4, LieType::E6, LieType::E7, LieType::E8}) {
    auto rs = shared_root_system(t, exceptional_rank(t));
    rs->ensure_constants();
    Rng rng(42);
    int dim = rs->dim();
    for (int trial = 0; trial < 1100; ++trial) {
      int a = rng.next() % dim, b = rng.next() % dim, c = rng.next() % dim;
      if (!jacobi_holds(*rs, a, b, c)) {
        CAPTURE(type_name(t), a, b, c);
        FAIL("Jacobi identity violated");
      }
    }
    SUCCEED();
  }
}

TEST_CASE("Jacobi identity exhaustively on small classical types") {
  for (auto [t, r] : {std::pair{LieType::A, 2}, {LieType::B, 2}, {LieType::C, 3}}) {
    RootSystem rs(t, r);
    rs.ensure_constants();
    int dim = rs.dim();
    for (int a = 0; a < dim; ++a)
      for (int b = a; b < dim; ++b)
        for (int c = b; c < dim; ++c)
          if (!jacobi_holds(rs, a, b, c)) {
            CAPTURE(type_name(t), a, b, c);
            FAIL("Jacobi identity violated");
          }
    SUCCEED();
  }
}

TEST_CASE("structure constants are antisymmetric and integral") {
  RootSystem rs(LieType::G2, 2);
  rs.ensure_constants();
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b)
      if (rs.sum_index(a, b) >= 0) {
        CHECK(rs.chevalley(a, b) == -rs.chevalley(b, a));
        CHECK(rs.chevalley(a, b) != 0);
      }
}

TEST_CASE("sl2 triple relations for simple roots") {
  RootSystem rs(LieType::F4, 4);
  rs.ensure_constants();
  for (int i = 0; i < 4; ++i) {
    // [H_i, X_{alpha_i}] = 2 X_{alpha_i}, [X_{alpha_i}, X_{-alpha_i}] = H_i
    std::vector<int> v(4, 0);
    v[i] = 1;
    int k = rs.index_of(v);
    CHECK(rs.pairing(k, i) == 2);
    auto h = rs.bracket_basis(4 + k, 4 + rs.neg(k));
    REQUIRE(h.size() == 1);
    CHECK(h.at(i) == 1);
  }
}
