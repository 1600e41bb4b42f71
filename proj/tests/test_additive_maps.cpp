#include <random>

#include "doctest.h"
#include "effalg/additive_maps.hpp"
#include "effalg/errors.hpp"

using namespace effalg;

namespace {

std::uint64_t to_u64(const BigInt& v) { return static_cast<std::uint64_t>(v); }

}  // namespace

TEST_CASE("subunital counts") {
  for (int n = 1; n <= 4; ++n) CHECK(count_subunital(Shape({n}), Shape({n})) == 2);
  CHECK(count_subunital(Shape({1, 1}), Shape({1, 1})) == 9);
  CHECK(count_subunital(Shape({1, 1, 1}), Shape({1, 1, 1})) == 64);
  CHECK(count_subunital(Shape({2, 1}), Shape({2, 1})) == 8);
  CHECK(count_subunital(Shape({1}), Shape({2})) == 3);
  CHECK(to_decimal(pow(BigInt(3), 40)) == "12157665459056928801");
}

TEST_CASE("count_rows agrees with enumerate_rows") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int rank = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<int> top(rank);
    for (auto& v : top) v = std::uniform_int_distribution<int>(1, 4)(rng);
    const Shape u(top);
    const int budget = std::uniform_int_distribution<int>(0, 6)(rng);
    const auto rows = enumerate_rows(u, budget);
    CHECK(rows.size() == to_u64(count_rows(u, budget)));
    CHECK(std::is_sorted(rows.begin(), rows.end()));
  }
}

TEST_CASE("subunital matrix validation") {
  CHECK(is_subunital({{1, 0}, {0, 1}}, Shape({1, 1}), Shape({1, 1})));
  CHECK_FALSE(is_subunital({{1, 1}, {0, 0}}, Shape({1, 1}), Shape({1, 1})));
  CHECK_THROWS_AS(is_subunital({{-1, 0}, {0, 0}}, Shape({1, 1}), Shape({1, 1})), InputError);
  CHECK_THROWS_AS(is_subunital({{1}}, Shape({1, 1}), Shape({1, 1})), InputError);
  CHECK_THROWS_AS(SubunitalMatrix(Shape({2}), Shape({2}), {{2}}), InputError);

  const auto id = SubunitalMatrix::identity(Shape({2, 1}));
  CHECK(id.apply(std::vector<int>{2, 1}) == std::vector<int>{2, 1});
  const auto z = SubunitalMatrix::zero(Shape({2, 1}), Shape({3}));
  CHECK(z.apply(std::vector<int>{2, 1}) == std::vector<int>{0});
}

TEST_CASE("enumerate_subunital respects the cap") {
  CHECK(enumerate_subunital(Shape({1, 1}), Shape({1, 1})).size() == 9);
  try {
    enumerate_subunital(Shape({1, 1, 1}), Shape({1, 1, 1}), 10);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.count() == "64");
  }
}

TEST_CASE("coordinate pickers") {
  const Shape one({1}), two({2});
  CHECK(coordinate_picker(SubunitalMatrix(one, two, {{2}})) == std::nullopt);
  CHECK(coordinate_picker(SubunitalMatrix(one, two, {{1}})) == std::vector<int>{1});
  CHECK(coordinate_picker(SubunitalMatrix(one, two, {{0}})) == std::vector<int>{0});
  CHECK(coordinate_picker(SubunitalMatrix(Shape({1, 1}), Shape({1, 1}), {{0, 1}, {1, 0}})) ==
        std::vector<int>{2, 1});
}

TEST_CASE("additive maps are exactly the matrix maps") {
  for (const auto& top : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 1}, {2, 1}}) {
    const Shape u(top);
    const auto e = EffectAlgebra::simplicial(u);
    auto brute = additive_maps_bruteforce(e, e);
    std::vector<MapTable> via_matrices;
    for (const auto& m : enumerate_subunital(u, u)) via_matrices.push_back(map_table(m));
    std::sort(via_matrices.begin(), via_matrices.end());
    CHECK(brute == via_matrices);
  }
}

TEST_CASE("non-additive maps are reported") {
  const auto e = EffectAlgebra::simplicial(Shape({2}));
  const MapTable constant_one{1, 1, 1};
  auto res = matrix_of_map(e, e, constant_one);
  REQUIRE(std::holds_alternative<NotAdditive>(res));
  CHECK(std::get<NotAdditive>(res).x == 0);
  CHECK(std::get<NotAdditive>(res).y == 0);
  CHECK_THROWS_AS(additive_maps_bruteforce(EffectAlgebra::simplicial(Shape({3, 3})),
                                           EffectAlgebra::simplicial(Shape({3, 3})), 1000),
                  CapExceeded);
}

TEST_CASE("property: matrix_of_map inverts map_table; composition stays subunital") {
  std::mt19937 rng(99);
  const std::vector<std::vector<int>> shapes{{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 1, 1}};
  std::uniform_int_distribution<std::size_t> pick_shape(0, shapes.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const Shape u(shapes[pick_shape(rng)]), v(shapes[pick_shape(rng)]), w(shapes[pick_shape(rng)]);
    const auto muv = enumerate_subunital(u, v);
    const auto mvw = enumerate_subunital(v, w);
    const auto& m = muv[std::uniform_int_distribution<std::size_t>(0, muv.size() - 1)(rng)];
    const auto& n = mvw[std::uniform_int_distribution<std::size_t>(0, mvw.size() - 1)(rng)];

    auto back = matrix_of_map(EffectAlgebra::simplicial(u), EffectAlgebra::simplicial(v), map_table(m));
    REQUIRE(std::holds_alternative<SubunitalMatrix>(back));
    CHECK(std::get<SubunitalMatrix>(back) == m);

    std::vector<RowVec> product(w.rank(), RowVec(u.rank(), 0));
    for (std::size_t i = 0; i < w.rank(); ++i)
      for (std::size_t j = 0; j < u.rank(); ++j)
        for (std::size_t k = 0; k < v.rank(); ++k) product[i][j] += n.at(i, k) * m.at(k, j);
    CHECK(is_subunital(product, u, w));
  }
}
