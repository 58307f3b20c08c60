#include <doctest.h>

#include <random>

#include "extfair/allocators.hpp"
#include "extfair/checkers.hpp"
#include "extfair/enumerate.hpp"
#include "extfair/gen.hpp"
#include "extfair/mms.hpp"
#include "extfair/transform.hpp"

using namespace extfair;

namespace {

Instance1D one_d_of(const Instance2D& inst) { return transform(inst).one_d; }

Instance2D random_2d(std::mt19937_64& rng, Kind kind, int max_m = 6) {
  GenSpec spec;
  spec.n = 2 + static_cast<int>(rng() % 2);
  spec.m = 1 + static_cast<int>(rng() % max_m);
  spec.kind = kind;
  spec.correlated = (rng() % 2) == 0;
  spec.seed = rng();
  spec.max_den = 5;
  return gen_instance(spec);
}

}  // namespace

TEST_CASE("round robin picks the best remaining item in order") {
  Instance1D inst;
  inst.n = 2;
  inst.m = 4;
  inst.item_ids = {"g1", "g2", "g3", "g4"};
  inst.w = {Rational(9), Rational(7), Rational(3), Rational(1),
            Rational(9), Rational(2), Rational(8), Rational(4)};
  const Allocation a = round_robin(inst, {0, 1});
  // 0 takes g1, 1 takes g3, 0 takes g2, 1 takes g4
  CHECK(a.assignment == std::vector<int>{0, 0, 1, 1});
  const Allocation b = round_robin(inst, {1, 0});
  // 1 takes g1, 0 takes g2, 1 takes g3, 0 takes g4
  CHECK(b.assignment == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("round robin rejects mixed signs and keeps EF1 in both spaces") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    const Kind kind = trial % 2 == 0 ? Kind::Goods : Kind::Chores;
    const Instance2D inst = random_2d(rng, kind);
    const Instance1D one_d = one_d_of(inst);
    std::vector<int> order(static_cast<size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) order[static_cast<size_t>(i)] = i;
    const Allocation a = round_robin(one_d, order);
    require_valid_allocation(inst.n, inst.m, a);
    CHECK(check_envy(ValueSystem::for_1d(one_d), a, EnvyLevel::EF1).holds);
    CHECK(check_envy(ValueSystem::for_2d(inst, Space::V), a, EnvyLevel::EF1).holds);
  }
  const Instance2D mixed = random_2d(rng, Kind::Mixed);
  bool has_good = false, has_chore = false;
  for (int k = 0; k < mixed.m; ++k) {
    const Rational w = mixed.marginal(0, k);
    has_good |= w > 0;
    has_chore |= w < 0;
  }
  if (has_good && has_chore)
    CHECK_THROWS_AS(round_robin(one_d_of(mixed), {0, 1}), Error);
}

TEST_CASE("double round robin handles mixed manna with EF1") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const Kind kind = static_cast<Kind>(trial % 3);
    const Instance2D inst = random_2d(rng, kind);
    const Instance1D one_d = one_d_of(inst);
    const Allocation a = double_round_robin(one_d);
    require_valid_allocation(inst.n, inst.m, a);
    CHECK(check_envy(ValueSystem::for_1d(one_d), a, EnvyLevel::EF1).holds);
    CHECK(check_envy(ValueSystem::for_2d(inst, Space::V), a, EnvyLevel::EF1).holds);
  }
}

TEST_CASE("envy cycle elimination stays EF1 on goods") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance2D inst = random_2d(rng, Kind::Goods, 8);
    const Instance1D one_d = one_d_of(inst);
    const Allocation a = envy_cycle(one_d);
    require_valid_allocation(inst.n, inst.m, a);
    CHECK(check_envy(ValueSystem::for_1d(one_d), a, EnvyLevel::EF1).holds);
    CHECK(check_envy(ValueSystem::for_2d(inst, Space::V), a, EnvyLevel::EF1).holds);
  }
}

TEST_CASE("bag filling reaches half of each maximin share") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const Instance2D inst = random_2d(rng, Kind::Goods);
    const Instance1D one_d = one_d_of(inst);
    std::vector<Rational> mu;
    for (int i = 0; i < inst.n; ++i) mu.push_back(mms_share_1d(one_d, i).mu);
    const Allocation a = bag_fill_half_mms(one_d, mu);
    require_valid_allocation(inst.n, inst.m, a);
    const ValueSystem vs = ValueSystem::for_1d(one_d);
    for (int i = 0; i < inst.n; ++i)
      CHECK(2 * vs.utility(i, a) >= mu[static_cast<size_t>(i)]);
  }
}

TEST_CASE("exhaustive optimization matches brute force on every objective") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    const Instance2D inst = random_2d(rng, Kind::Mixed, 4);
    const ValueSystem vs = ValueSystem::for_2d(inst, Space::V);
    for (OptObjective obj : {OptObjective::MUW, OptObjective::MEW, OptObjective::LEXIMIN}) {
      const Allocation best = exhaustive_opt(vs, obj);
      const WelfareObjective check_obj = obj == OptObjective::MUW ? WelfareObjective::MUW
                                         : obj == OptObjective::MEW
                                             ? WelfareObjective::MEW
                                             : WelfareObjective::LEXIMIN_OPT;
      CHECK(check_welfare_opt(vs, best, check_obj).holds);
    }
  }
}

TEST_CASE("nash welfare optimum needs non-negative marginals") {
  std::mt19937_64 rng(111);
  const Instance2D goods = random_2d(rng, Kind::Goods, 4);
  const Instance1D one_d = one_d_of(goods);
  const ValueSystem vw = ValueSystem::for_1d(one_d);
  const Allocation best = exhaustive_opt(vw, OptObjective::MNW_ON_W);
  // no allocation has a strictly larger utility product
  const uint64_t total = allocation_count(goods.n, goods.m);
  Rational best_prod = 1;
  for (int i = 0; i < goods.n; ++i) best_prod *= vw.utility(i, best);
  for (uint64_t idx = 0; idx < total; ++idx) {
    const Allocation a = allocation_at(goods.n, goods.m, idx);
    Rational prod = 1;
    for (int i = 0; i < goods.n; ++i) prod *= vw.utility(i, a);
    CHECK(prod <= best_prod);
  }
  const ValueSystem vv = ValueSystem::for_2d(goods, Space::V);
  CHECK_THROWS_AS(exhaustive_opt(vv, OptObjective::MNW_ON_W), Error);
}

TEST_CASE("predicate search returns the first satisfying allocation") {
  GenSpec spec;
  spec.n = 2;
  spec.m = 3;
  spec.kind = Kind::Goods;
  spec.seed = 21;
  const Instance2D inst = gen_instance(spec);
  const NotionEvaluator eval(inst, Space::V);
  const std::vector<NotionRequest> want = {{Notion::EF1, std::nullopt},
                                           {Notion::PO, std::nullopt}};
  const auto found = search_predicate(eval, want);
  REQUIRE(found.has_value());
  CHECK(eval.check(Notion::EF1, *found).holds);
  CHECK(eval.check(Notion::PO, *found).holds);
  const uint64_t cut = allocation_index(2, *found);
  for (uint64_t idx = 0; idx < cut; ++idx) {
    const Allocation a = allocation_at(2, 3, idx);
    const bool both = eval.check(Notion::EF1, a).holds && eval.check(Notion::PO, a).holds;
    CHECK_FALSE(both);
  }
  // an unsatisfiable conjunction yields no witness
  const std::vector<NotionRequest> impossible = {{Notion::EQ, std::nullopt},
                                                 {Notion::EF, std::nullopt},
                                                 {Notion::MUW, std::nullopt},
                                                 {Notion::MEW, std::nullopt}};
  const auto none = search_predicate(eval, impossible);
  if (none.has_value()) {
    for (const NotionRequest& r : impossible) CHECK(eval.check(r.notion, *none).holds);
  }
}
