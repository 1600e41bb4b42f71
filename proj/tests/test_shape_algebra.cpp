#include <random>

#include "doctest.h"
#include "effalg/algebra.hpp"
#include "effalg/errors.hpp"

using namespace effalg;

TEST_CASE("shape validation and indexing") {
  CHECK_THROWS_AS(Shape({}), InputError);
  CHECK_THROWS_AS(Shape({2, 0}), InputError);
  CHECK_THROWS_AS(parse_shape("2,,1"), InputError);
  CHECK_THROWS_AS(parse_shape("a"), InputError);

  const Shape u = parse_shape("2,1");
  CHECK(u.rank() == 2);
  CHECK(u.carrier_size() == 6);
  CHECK(u.to_string() == "(2,1)");
  CHECK(u.index_of(std::vector<int>{1, 0}) == 1);
  CHECK(u.index_of(std::vector<int>{0, 1}) == 3);
  CHECK(u.coords_of(5) == std::vector<int>{2, 1});
  CHECK_FALSE(u.homogeneous());
  CHECK(Shape({3, 3}).homogeneous());
  CHECK(Shape({1, 1, 1}).boolean());
  CHECK_FALSE(u.boolean());

  const Shape huge({1000, 1000, 1000});
  CHECK_FALSE(huge.fits_carrier_limit());
  CHECK_THROWS_AS(huge.require_carrier_limit(), CarrierTooLarge);
  CHECK_THROWS_AS(EffectAlgebra::simplicial(huge), CarrierTooLarge);
}

TEST_CASE("simplicial algebra basics") {
  const auto e = EffectAlgebra::simplicial(Shape({2, 1}));
  CHECK(e.size() == 6);
  CHECK(e.zero() == 0);
  CHECK(e.one() == 5);
  CHECK(e.oplus(1, 1) == 2);
  CHECK(e.oplus(2, 1) == kUndefined);
  CHECK(e.complement(1) == 4);
  CHECK(e.leq(1, 4));
  CHECK_FALSE(e.leq(3, 2));

  auto atoms = e.atoms();
  REQUIRE(atoms.size() == 2);
  CHECK(atoms[0].atom == 1);
  CHECK(atoms[0].isotropic_index == 2);
  CHECK(atoms[1].atom == 3);
  CHECK(atoms[1].isotropic_index == 1);
  CHECK(e.has_obstruction_atom());
  CHECK_FALSE(EffectAlgebra::simplicial(Shape({1, 1})).has_obstruction_atom());
  CHECK_THROWS_AS(e.isotropic_index(0), InputError);

  CHECK(e.oplus(Elem{{1, 0}}, Elem{{1, 1}}) == Elem{{2, 1}});
  CHECK_FALSE(e.oplus(Elem{{2, 0}}, Elem{{1, 0}}).has_value());
  CHECK(e.complement(Elem{{0, 1}}) == Elem{{2, 0}});
}

TEST_CASE("table validation") {
  CHECK(validate_table_algebra(mo2_table()).valid());
  for (int n = 1; n <= 5; ++n) CHECK(validate_table_algebra(chain_table(n)).valid());

  auto broken = chain_table(2);
  broken.sum[0][1] = 2;  // 0 + 1 = 2 breaks commutativity
  auto report = validate_table_algebra(broken);
  CHECK_FALSE(report.valid());
  REQUIRE(report.find(TableAxiom::Commutativity));
  CHECK(report.find(TableAxiom::Commutativity)->witness == std::vector<Index>{0, 1});
  CHECK_THROWS_AS(EffectAlgebra::from_table(broken), InputError);

  auto two_supplements = mo2_table();
  two_supplements.sum[1][4] = two_supplements.sum[4][1] = 5;  // a + b' = 1 as well
  CHECK(validate_table_algebra(two_supplements).find(TableAxiom::Orthosupplement));

  auto bad_range = chain_table(1);
  bad_range.sum[0][0] = 7;
  CHECK_THROWS_AS(validate_table_algebra(bad_range), InputError);
  auto same = chain_table(1);
  same.one = 0;
  CHECK_THROWS_AS(validate_table_algebra(same), InputError);
}

TEST_CASE("MO2 order, atoms and chains") {
  const auto mo2 = EffectAlgebra::from_table(mo2_table());
  // indices: 0, a, a', b, b', 1
  CHECK_FALSE(mo2.leq(1, 4));
  CHECK(mo2.leq(1, 5));
  CHECK(mo2.complement(1) == 2);
  auto atoms = mo2.atoms();
  CHECK(atoms.size() == 4);
  for (const auto& a : atoms) CHECK(a.isotropic_index == 1);
  CHECK_FALSE(unique_atom_chain(mo2).has_value());

  auto c3 = unique_atom_chain(EffectAlgebra::from_table(chain_table(3)));
  REQUIRE(c3);
  CHECK(c3->length == 3);
  CHECK(c3->multiples == std::vector<Index>{0, 1, 2, 3});
  auto c1 = unique_atom_chain(EffectAlgebra::from_table(chain_table(1)));
  REQUIRE(c1);
  CHECK(c1->length == 1);
}

TEST_CASE("table round trip of simplicial algebras") {
  const auto e = EffectAlgebra::simplicial(Shape({2, 2}));
  const auto t = EffectAlgebra::from_table(e.to_table());
  for (Index x = 0; x < e.size(); ++x) {
    CHECK(t.complement(x) == e.complement(x));
    for (Index y = 0; y < e.size(); ++y) {
      CHECK(t.oplus(x, y) == e.oplus(x, y));
      CHECK(t.leq(x, y) == e.leq(x, y));
    }
  }
}

TEST_CASE("property: complement, order and sums on random shapes") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 40; ++trial) {
    const int rank = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> top(rank);
    for (auto& v : top) v = std::uniform_int_distribution<int>(1, 3)(rng);
    const auto e = EffectAlgebra::simplicial(Shape(top));
    const Index n = e.size();
    for (Index x = 0; x < n; ++x) {
      CHECK(e.complement(e.complement(x)) == x);
      CHECK(e.complement(x) == n - 1 - x);
      CHECK(e.oplus(x, e.complement(x)) == e.one());
    }
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (int k = 0; k < 50; ++k) {
      const Index x = pick(rng), y = pick(rng);
      // x <= y  <=>  x + y' is defined  <=>  some z has x + z = y
      CHECK(e.leq(x, y) == e.orthogonal(x, e.complement(y)));
      bool exists = false;
      for (Index z = 0; z < n; ++z) exists = exists || e.oplus(x, z) == y;
      CHECK(e.leq(x, y) == exists);
      CHECK(e.oplus(x, y) == e.oplus(y, x));
    }
  }
}
