#include <random>

#include "doctest.h"
#include "effalg/axioms.hpp"
#include "effalg/errors.hpp"
#include "effalg/operation.hpp"
#include "effalg/search.hpp"

using namespace effalg;

namespace {

AlgebraPtr simplicial(std::vector<int> top) { return make_algebra(EffectAlgebra::simplicial(Shape(std::move(top)))); }

}  // namespace

TEST_CASE("sigma and meet values") {
  auto sigma = sigma_universal(simplicial({2}));
  CHECK(sigma.representation() == Representation::MatrixFamily);
  CHECK(sigma(0, 2) == 0);
  CHECK(sigma(1, 2) == 2);
  CHECK(sigma(2, 1) == 1);

  auto meet = meet_boolean(2);
  CHECK(meet(1, 2) == 0);
  CHECK(meet(3, 2) == 2);
  CHECK(meet(1, 3) == 1);
  CHECK_THROWS_AS(meet_boolean(simplicial({2, 1})), InputError);

  auto table_sigma = sigma_universal(make_algebra(EffectAlgebra::from_table(mo2_table())));
  CHECK(table_sigma.representation() == Representation::FullTable);
  CHECK_THROWS_AS(table_sigma.matrices(), InputError);
}

TEST_CASE("tau permutation operation") {
  auto tau = tau_perm(Shape({1, 1}), std::vector<int>{2, 1});
  // p = (1,0) = 1, q = (0,1) = 2
  CHECK(tau(1, 1) == 2);
  CHECK(tau(1, 2) == 1);
  CHECK(tau(3, 1) == 1);
  CHECK(tau(0, 3) == 0);
  CHECK_FALSE(commutes(tau, 1, 3));
  CHECK(check_axioms(tau, 3).all_pass());
  CHECK_FALSE(tau.same_table(sigma_universal(tau.algebra_ptr())));
  CHECK_THROWS_AS(tau_perm(Shape({2, 1}), std::vector<int>{2, 1}), InputError);
  CHECK_THROWS_AS(tau_perm(Shape({2}), std::vector<int>{1}), InputError);
  CHECK_THROWS_AS(tau_perm(Shape({1, 1}), std::vector<int>{1, 1}), InputError);
}

TEST_CASE("right unit") {
  auto sigma3 = sigma_universal(simplicial({3}));
  auto r = right_unit_holds(sigma3);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(*r.witness == 1);
  CHECK(right_unit_holds(meet_boolean(3)).holds);
}

TEST_CASE("axiom reports and witnesses") {
  auto sigma2 = sigma_universal(simplicial({2}));
  auto report = check_axioms(sigma2, 5);
  CHECK(report.passes(Axiom::S1));
  CHECK(report.passes(Axiom::S2));
  CHECK(report.passes(Axiom::S3));
  CHECK_FALSE(report.passes(Axiom::S4));
  CHECK_FALSE(report.all_pass());
  CHECK(replay_violation(sigma2, Axiom::S4, *report.failure(Axiom::S4)));
  CHECK_THROWS_AS(check_axioms(sigma2, 0), InputError);
  CHECK_THROWS_AS(check_axioms(sigma2, 6), InputError);

  auto partial = check_axioms(sigma2, 2);
  CHECK(partial.all_pass());
  CHECK_FALSE(partial.checked(Axiom::S3));

  // The constant-zero table violates S2 at a = 1 and S1 nowhere.
  auto alg = simplicial({1});
  auto zero = Operation::from_table(alg, std::vector<Index>(4, 0));
  auto zr = check_axioms(zero, 3);
  CHECK(zr.passes(Axiom::S1));
  REQUIRE(zr.failure(Axiom::S2));
  CHECK(zr.failure(Axiom::S2)->a == 1);
}

TEST_CASE("S3 asymmetry is caught") {
  // B2 with p o q = 0 while q o p = p.
  auto alg = simplicial({1, 1});
  std::vector<Index> t(16);
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) t[a * 4 + b] = a == 0 ? 0 : b;
  t[1 * 4 + 2] = 0;  // p o q = 0
  t[1 * 4 + 3] = 1;  // keeps p o - additive
  auto op = Operation::from_table(alg, t);
  auto report = check_axioms(op, 3);
  CHECK(report.passes(Axiom::S1));
  REQUIRE(report.failure(Axiom::S3));
  CHECK(*report.failure(Axiom::S3) == Witness{1, 2, std::nullopt});
  CHECK(replay_violation(op, Axiom::S3, *report.failure(Axiom::S3)));
}

TEST_CASE("full table conversions") {
  auto sigma = sigma_universal(simplicial({2, 1}));
  auto full = to_full_table(sigma);
  CHECK(full.representation() == Representation::FullTable);
  CHECK(full.same_table(sigma));
  auto back = from_full_table(sigma.algebra_ptr(), std::vector<Index>(full.table().begin(), full.table().end()));
  REQUIRE(std::holds_alternative<Operation>(back));
  CHECK(std::get<Operation>(back).matrices() == sigma.matrices());

  std::vector<Index> bad(full.table().begin(), full.table().end());
  bad[1 * 6 + 0] = 1;  // 1 o 0 = 1 breaks additivity of row 1
  auto err = from_full_table(sigma.algebra_ptr(), bad);
  REQUIRE(std::holds_alternative<NotS1>(err));
  CHECK(std::get<NotS1>(err).row == 1);
  CHECK_THROWS_AS(Operation::from_table(sigma.algebra_ptr(), std::vector<Index>(5, 0)), InputError);
}

TEST_CASE("property: every reported witness replays") {
  std::mt19937 rng(4242);
  auto alg = simplicial({1, 1});
  const auto ms = enumerate_subunital(Shape({1, 1}), Shape({1, 1}));
  std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
  int failures_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<SubunitalMatrix> rows;
    for (Index a = 0; a < alg->size(); ++a) rows.push_back(ms[pick(rng)]);
    if (trial % 2 == 0) rows[3] = SubunitalMatrix::identity(Shape({1, 1}));
    auto op = Operation::from_matrices(alg, rows);
    auto report = check_axioms(op, 5);
    CHECK(report.passes(Axiom::S1));
    for (int k = 1; k <= 5; ++k) {
      const auto axiom = static_cast<Axiom>(k);
      if (const auto& w = report.failure(axiom)) {
        ++failures_seen;
        CHECK(replay_violation(op, axiom, *w));
      }
    }
    // Monotonicity of prefixes: passing S1..Sk implies passing S1..Sj for j < k.
    for (int k = 2; k <= 5; ++k)
      if (check_axioms(op, k).all_pass()) CHECK(check_axioms(op, k - 1).all_pass());
  }
  CHECK(failures_seen > 0);
}

TEST_CASE("property: sigma passes S1-S3 on random shapes") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 15; ++trial) {
    const int rank = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> top(rank);
    for (auto& v : top) v = std::uniform_int_distribution<int>(1, 3)(rng);
    auto op = sigma_universal(simplicial(top));
    CHECK(check_axioms(op, 3).all_pass());
  }
}
