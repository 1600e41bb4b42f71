#include <algorithm>

#include "doctest.h"
#include "effalg/errors.hpp"
#include "effalg/search.hpp"

using namespace effalg;

namespace {

std::vector<std::vector<Index>> tables(const std::vector<Operation>& ops) {
  std::vector<std::vector<Index>> out;
  for (const auto& op : ops) out.emplace_back(op.table().begin(), op.table().end());
  std::sort(out.begin(), out.end());
  return out;
}

SearchResult run(std::vector<int> top, int k, SearchOptions o = {}) { return enumerate_s1sk(Shape(std::move(top)), k, o); }

}  // namespace

TEST_CASE("closed-form prefix counts") {
  CHECK(count_s1s2(Shape({1})) == 2);
  CHECK(count_s1s2(Shape({2})) == 4);
  CHECK(count_s1s2(Shape({3})) == 8);
  CHECK(count_s1s2(Shape({1, 1})) == 729);
  CHECK(count_prefix_formula(Shape({1, 1}), 1) == 6561);
  CHECK(count_s1s2(Shape({2, 1})) == 32768);
  CHECK_THROWS_AS(count_prefix_formula(Shape({1}), 3), InputError);
  CHECK(enumerate_s1s2(Shape({1, 1})).size() == 729);
  CHECK_THROWS_AS(enumerate_s1s2(Shape({1, 1}), 100), CapExceeded);
  CHECK_THROWS_AS(run({1}, 0), InputError);
  CHECK_THROWS_AS(run({1}, 6), InputError);
}

TEST_CASE("formula results list operations within the cap only") {
  auto small = run({2}, 2);
  CHECK(small.certificate == Certificate::Formula);
  REQUIRE(small.operations);
  CHECK(small.operations->size() == 4);
  SearchOptions tight;
  tight.cap = 10;
  auto big = run({1, 1}, 2, tight);
  CHECK(big.count == 729);
  CHECK_FALSE(big.operations.has_value());
}

TEST_CASE("chains: S1-S3 unique and equal to sigma") {
  for (int n = 1; n <= 4; ++n) {
    auto r = chain_report(n);
    CHECK(r.s1s2_count == (1 << n));
    CHECK(r.s1s3_count == 1);
    CHECK(r.s1s3_is_sigma);
    CHECK(r.s1s4 == (n == 1 ? Existence::Exists : Existence::None));
  }
  CHECK(chain_report(1).s1s5_is_meet);
}

TEST_CASE("B2 classification") {
  auto c = classify_b2();
  CHECK(c.entries.size() == 34);
  CHECK(c.zero_block == 9);
  CHECK(c.nonzero_block == 25);
  CHECK(c.row_pattern);
  CHECK(c.cross_zero);
}

TEST_CASE("S4 existence follows the Boolean shapes") {
  for (const auto& top : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 1}, {2, 2}}) {
    auto e = exists_s1s4(Shape(top));
    CHECK(e.verdict == Existence::None);
    CHECK(e.obstruction);
    CHECK(e.survivor_count == 0);
  }
  auto meet_witness = [](std::vector<int> top) {
    auto e = exists_s1s4(Shape(top));
    REQUIRE(e.verdict == Existence::Exists);
    REQUIRE(e.witness);
    CHECK(e.witness->same_table(meet_boolean(static_cast<int>(top.size()))));
    for (const auto& op : e.survivors) CHECK(right_unit_holds(op).holds);
  };
  meet_witness({1});
  meet_witness({1, 1});
  meet_witness({1, 1, 1});
}

TEST_CASE("node budget turns into Undecided") {
  SearchOptions o;
  o.node_budget = 3;
  auto r = run({2, 2}, 3, o);
  CHECK(r.status == SearchStatus::Undecided);
  auto e = exists_s1s4(Shape({2, 2}), o);
  CHECK(e.verdict == Existence::Undecided);
}

TEST_CASE("pruning, threads and caps do not change the survivor set") {
  // Without pruning, (1,1,1) explores the whole (S1)-(S3) space and exceeds
  // the default node budget, so it is only compared across thread counts.
  const std::vector<std::pair<std::vector<int>, int>> cases{
      {{1}, 3}, {{2}, 3}, {{3}, 3}, {{1, 1}, 3}, {{2, 1}, 3}, {{1}, 4}, {{2}, 4}, {{1, 1}, 4},
      {{2, 1}, 4}, {{1, 1, 1}, 4}, {{1}, 5}, {{1, 1}, 5}, {{2, 1}, 5}, {{1, 1, 1}, 5}};
  SearchOptions plain;
  plain.prune_upper_axioms = false;
  SearchOptions threaded;
  threaded.threads = 4;
  for (const auto& [top, k] : cases) {
    CAPTURE(k);
    auto a = run(top, k);
    auto c = run(top, k, threaded);
    REQUIRE(a.status == SearchStatus::Complete);
    REQUIRE(c.status == SearchStatus::Complete);
    REQUIRE(a.operations);
    REQUIRE(c.operations);
    // Threaded search keeps the canonical order, not just the set.
    std::vector<std::vector<Index>> ordered_a, ordered_c;
    for (const auto& op : *a.operations) ordered_a.emplace_back(op.table().begin(), op.table().end());
    for (const auto& op : *c.operations) ordered_c.emplace_back(op.table().begin(), op.table().end());
    CHECK(ordered_a == ordered_c);
    if (top.size() < 3) {
      auto b = run(top, k, plain);
      REQUIRE(b.status == SearchStatus::Complete);
      REQUIRE(b.operations);
      CHECK(tables(*a.operations) == tables(*b.operations));
    }
  }
  SearchOptions capped;
  capped.cap = 5;
  auto r = run({1, 1}, 3, capped);
  CHECK(r.count == 34);
  CHECK_FALSE(r.operations.has_value());
}

TEST_CASE("prefix counts are monotone") {
  for (const auto& top : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}}) {
    BigInt previous = count_prefix_formula(Shape(top), 1);
    for (int k = 2; k <= 5; ++k) {
      auto r = run(top, k);
      CHECK(r.count <= previous);
      previous = r.count;
    }
  }
}

TEST_CASE("structured search agrees with the table brute force") {
  for (int n = 1; n <= 2; ++n) {
    auto alg = make_algebra(EffectAlgebra::simplicial(Shape({n})));
    for (int k = 1; k <= 5; ++k) {
      auto brute = full_bruteforce_ops(alg, k);
      auto structured = run({n}, k);
      REQUIRE(structured.operations);
      CHECK(tables(brute) == tables(*structured.operations));
    }
  }
  auto b2 = make_algebra(EffectAlgebra::simplicial(Shape({1, 1})));
  CHECK_THROWS_AS(full_bruteforce_ops(b2, 3, 1000), CapExceeded);
}

TEST_CASE("property: survivors annihilate zero on both sides") {
  for (const auto& top : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 1}, {2, 1}}) {
    for (int k = 1; k <= 3; ++k) {
      auto r = run(top, k);
      if (!r.operations) continue;  // above the materialization cap
      for (const auto& op : *r.operations) {
        for (Index a = 0; a < op.size(); ++a) CHECK(op(a, 0) == 0);
        if (k == 3)
          for (Index b = 0; b < op.size(); ++b) CHECK(op(0, b) == 0);
      }
    }
  }
}
