#include <catch2/catch_amalgamated.hpp>

#include "nicepar/classify.hpp"
#include "nicepar/jordan.hpp"

using namespace nicepar;

namespace {
std::vector<std::vector<int>> all_colorings(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::vector<int> u(rank);
    for (int i = 0; i < rank; ++i) u[i] = (mask >> i) & 1;
    out.push_back(u);
  }
  return out;
}
}  // namespace

TEST_CASE("type A generic ranks by window sums") {
  std::vector<int> b{2, 1, 2};
  CHECK(generic_rank_A(b, 1) == 2);
  CHECK(generic_rank_A(b, 2) == 1);
  CHECK(generic_rank_A(b, 3) == 0);
  CHECK(generic_rank_A({7}, 1) == 0);
  CHECK(generic_rank_A({1, 2, 3, 1}, 1) == 4);
}

TEST_CASE("type C generic ranks") {
  std::vector<int> b{3, 4, 3};
  CHECK(generic_rank_C(b, 1) == 6);
  CHECK(generic_rank_C(b, 2) == 2);
  CHECK(generic_rank_C(b, 3) == 0);
  // single block: g_1 = 0
  CHECK(generic_rank_C({8}, 1) == 0);
  // even count delegates to the sl formula
  for (int j = 1; j <= 4; ++j) CHECK(generic_rank_C({2, 4, 4, 2}, j) == generic_rank_A({2, 4, 4, 2}, j));
}

TEST_CASE("types B and D generic ranks") {
  // B (3,5,3): kernel dims 5, 8, 11
  std::vector<int> b353{3, 5, 3};
  CHECK(11 - generic_rank_BD(b353, 1, true) == 5);
  CHECK(11 - generic_rank_BD(b353, 2, true) == 8);
  CHECK(11 - generic_rank_BD(b353, 3, true) == 11);
  // D (2,3,3,2): kernel dims 4, 6, 8, 10
  std::vector<int> d2332{2, 3, 3, 2};
  for (int j = 1; j <= 4; ++j) CHECK(10 - generic_rank_BD(d2332, j, false) == 2 + 2 * j);
  // D (n,n): rank drops by one exactly when n is odd
  CHECK(generic_rank_BD({4, 4}, 1, false) == 4);
  CHECK(generic_rank_BD({5, 5}, 1, false) == 4);
}

TEST_CASE("jordan forms of the worked examples") {
  CHECK(jordan_form(BlockSequence(LieType::C, 5, {3, 4, 3})).partition() == Partition({3, 3, 2, 2}));
  CHECK(jordan_form(BlockSequence(LieType::C, 6, {2, 4, 4, 2})).partition() == Partition({4, 4, 2, 2}));
  CHECK(jordan_form(BlockSequence(LieType::A, 4, {2, 1, 2})).partition() == Partition({3, 1, 1}));
  CHECK(jordan_form(BlockSequence(LieType::B, 5, {3, 5, 3})).partition() == Partition({3, 3, 3, 1, 1}));
  CHECK(jordan_form(BlockSequence(LieType::D, 5, {2, 3, 3, 2})).partition() == Partition({4, 4, 1, 1}));
  CHECK(jordan_form(BlockSequence(LieType::A, 1, {2})).partition() == Partition({1, 1}));
}

TEST_CASE("centralizer dimensions of the worked examples") {
  CHECK(centralizer_dim(Partition({3, 3, 2, 2}), LieType::C) == 19);
  CHECK(centralizer_dim(Partition({3, 3, 3, 1, 1}), LieType::B) == 19);
  CHECK(centralizer_dim(Partition({4, 4, 1, 1}), LieType::D) == 13);
  CHECK(centralizer_dim(Partition({3, 1, 1}), LieType::A) == 11);
  CHECK_THROWS_AS(centralizer_dim(Partition({3, 2}), LieType::C), invalid_partition);
  CHECK_THROWS_AS(centralizer_dim(Partition({2, 1}), LieType::B), invalid_partition);
}

TEST_CASE("dimension route on the worked examples") {
  CHECK(nice_via_dimension(BlockSequence(LieType::C, 5, {3, 4, 3})));
  CHECK_FALSE(nice_via_dimension(BlockSequence(LieType::A, 4, {2, 1, 2})));
  CHECK_FALSE(nice_via_dimension(BlockSequence(LieType::D, 6, {3, 3, 3, 3})));
  CHECK(nice_via_dimension(BlockSequence(LieType::D, 11, {1, 3, 5, 4, 5, 3, 1})));
}

TEST_CASE("B5 (3,5,3) versus B4 (2,5,2): the displayed numbers pin the rank down") {
  // Only the B5 sequence reproduces partition (3,3,3,1,1) with dual (5,3,3)
  // and centralizer dimension 19; the B4 sequence gives 14.
  Partition p5 = jordan_form(BlockSequence(LieType::B, 5, {3, 5, 3})).partition();
  CHECK(p5 == Partition({3, 3, 3, 1, 1}));
  CHECK(dual_partition(p5) == Partition({5, 3, 3}));
  CHECK(centralizer_dim(p5, LieType::B) == 19);
  CHECK(levi_dim(BlockSequence(LieType::B, 5, {3, 5, 3})) == 19);

  Partition p4 = jordan_form(BlockSequence(LieType::B, 4, {2, 5, 2})).partition();
  CHECK(centralizer_dim(p4, LieType::B) == 14);
  CHECK(centralizer_dim(p4, LieType::B) != 19);
}

TEST_CASE("palindromic delegations to the sl formula") {
  // C with an even block count and B/D with an odd count have the same
  // generic ranks as the corresponding sl parabolic.
  auto check_delegation = [](LieType t, int rank) {
    for (const auto& u : all_colorings(rank)) {
      BlockSequence bs = coloring_to_blocks(ParabolicSpec(t, rank, u));
      std::size_t L = bs.blocks.size();
      bool delegates = (t == LieType::C && L % 2 == 0) || ((t == LieType::B || t == LieType::D) && L % 2 == 1);
      if (!delegates) continue;
      for (int j = 1; j <= gl_size(t, rank); ++j) {
        int expect = generic_rank_A(bs.blocks, j);
        CHECK(generic_rank(bs, j) == expect);
        if (expect == 0) break;
      }
    }
  };
  check_delegation(LieType::C, 5);
  check_delegation(LieType::B, 5);
  check_delegation(LieType::D, 6);
}

TEST_CASE("unimodal type A: dual of the Jordan partition sorts the blocks") {
  for (int rank = 1; rank <= 7; ++rank)
    for (const auto& u : all_colorings(rank)) {
      BlockSequence bs = coloring_to_blocks(ParabolicSpec(LieType::A, rank, u));
      if (!is_unimodal(bs.blocks)) continue;
      std::vector<int> sorted = bs.blocks;
      std::sort(sorted.rbegin(), sorted.rend());
      CHECK(dual_partition(jordan_form(bs).partition()) == Partition(sorted));
    }
}

TEST_CASE("centralizer dimension never drops below the Levi dimension") {
  for (auto [t, lo] : {std::pair{LieType::A, 1}, {LieType::B, 2}, {LieType::C, 3}, {LieType::D, 4}})
    for (int rank = lo; rank <= 7; ++rank)
      for (const auto& u : all_colorings(rank)) {
        BlockSequence bs = coloring_to_blocks(ParabolicSpec(t, rank, u));
        Partition p = jordan_form(bs).partition();
        CHECK(centralizer_dim(p, t) >= levi_dim(bs));
      }
}

TEST_CASE("dimension route agrees with the classification theorems, rank <= 7") {
  for (auto [t, lo] : {std::pair{LieType::A, 1}, {LieType::B, 2}, {LieType::C, 3}, {LieType::D, 4}})
    for (int rank = lo; rank <= 7; ++rank)
      for (const auto& u : all_colorings(rank)) {
        ParabolicSpec spec(t, rank, u);
        BlockSequence bs = coloring_to_blocks(spec);
        CAPTURE(type_name(t), rank, u);
        CHECK(nice_via_dimension(bs) == is_nice(spec).nice);
      }
}
