#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "extfair/checkers.hpp"
#include "extfair/enumerate.hpp"
#include "extfair/gen.hpp"
#include "extfair/transform.hpp"

using namespace extfair;

namespace {

// Straight-from-the-definition reference checkers, written independently of
// the library code paths (no incremental scans, no masks).

Rational ref_bundle(const ValueSystem& vs, int agent, const Allocation& alloc, int holder) {
  Rational s = 0;
  for (int k = 0; k < vs.items(); ++k) {
    const bool held = alloc.agent_of(k) == holder;
    if (held)
      s += vs.in_value(agent, k);
    else if (vs.has_out())
      s += vs.out_value(agent, k);
  }
  return s;
}

// Value to `agent` of swapping its own bundle for agent j's bundle.
Rational ref_swap_value(const ValueSystem& vs, int agent, const Allocation& alloc, int j) {
  Rational s = 0;
  for (int k = 0; k < vs.items(); ++k) {
    const int h = alloc.agent_of(k) == j ? agent : (alloc.agent_of(k) == agent ? j
                                                                              : alloc.agent_of(k));
    if (h == agent)
      s += vs.in_value(agent, k);
    else if (vs.has_out())
      s += vs.out_value(agent, k);
  }
  return s;
}

bool ref_ef(const ValueSystem& vs, const Allocation& alloc) {
  for (int i = 0; i < vs.agents(); ++i)
    for (int j = 0; j < vs.agents(); ++j)
      if (i != j && vs.utility(i, alloc) < ref_swap_value(vs, i, alloc, j)) return false;
  return true;
}

bool ref_ef1(const ValueSystem& vs, const Allocation& alloc) {
  for (int i = 0; i < vs.agents(); ++i) {
    const Rational ui = vs.utility(i, alloc);
    for (int j = 0; j < vs.agents(); ++j) {
      if (i == j) continue;
      const Rational swapped = ref_swap_value(vs, i, alloc, j);
      if (ui >= swapped) continue;
      bool saved = false;
      for (int k = 0; k < vs.items() && !saved; ++k) {
        const int holder = alloc.agent_of(k);
        if (holder != i && holder != j) continue;
        // removing item k entirely from the instance
        Allocation trimmed = alloc;
        Rational ui2 = 0, sw2 = 0;
        for (int t = 0; t < vs.items(); ++t) {
          if (t == k) continue;
          const int h = trimmed.agent_of(t);
          if (h == i)
            ui2 += vs.in_value(i, t);
          else if (vs.has_out())
            ui2 += vs.out_value(i, t);
          const int hs = h == j ? i : (h == i ? j : h);
          if (hs == i)
            sw2 += vs.in_value(i, t);
          else if (vs.has_out())
            sw2 += vs.out_value(i, t);
        }
        if (ui2 >= sw2) saved = true;
      }
      if (!saved) return false;
    }
  }
  return true;
}

bool ref_prop_e(const ValueSystem& vs, const Allocation& alloc, int level) {
  const int n = vs.agents();
  for (int i = 0; i < n; ++i) {
    Rational threshold = 0;
    for (int j = 0; j < n; ++j) threshold += ref_swap_value(vs, i, alloc, j);
    threshold /= n;
    const Rational ui = vs.utility(i, alloc);
    if (level == 0) {
      if (ui < threshold) return false;
      continue;
    }
    if (ui >= threshold) continue;
    if (level == 1) {
      // PROP1-E: adding some outside item or dropping some held item helps
      bool saved = false;
      for (int k = 0; k < vs.items() && !saved; ++k) {
        Rational adjusted = ui;
        if (alloc.agent_of(k) == i) {
          adjusted -= vs.in_value(i, k);
          if (vs.has_out()) adjusted += vs.out_value(i, k);
        } else {
          adjusted += vs.in_value(i, k);
          if (vs.has_out()) adjusted -= vs.out_value(i, k);
        }
        if (adjusted >= threshold) saved = true;
      }
      if (!saved) return false;
    } else {
      // PROPX-E: every outside good added, and every held chore dropped
      for (int k = 0; k < vs.items(); ++k) {
        Rational adjusted = ui;
        const bool held = alloc.agent_of(k) == i;
        const bool goodish = vs.item_class(i, k) != ItemClass::Chore;
        if (!held && goodish) {
          adjusted += vs.in_value(i, k);
          if (vs.has_out()) adjusted -= vs.out_value(i, k);
        } else if (held && !goodish) {
          adjusted -= vs.in_value(i, k);
          if (vs.has_out()) adjusted += vs.out_value(i, k);
        } else {
          continue;
        }
        if (adjusted < threshold) return false;
      }
    }
  }
  return true;
}

bool ref_avg_share(const Instance2D& inst, const Allocation& alloc) {
  for (int i = 0; i < inst.n; ++i) {
    Rational threshold = 0;
    for (int k = 0; k < inst.m; ++k)
      threshold += (inst.value(i, k) + Rational(inst.n - 1) * inst.extern_value(i, k)) / inst.n;
    if (utility_2d(inst, i, alloc) < threshold) return false;
  }
  return true;
}

std::vector<Instance2D> random_corpus(uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Instance2D> out;
  for (int t = 0; t < count; ++t) {
    GenSpec spec;
    spec.n = 2 + static_cast<int>(rng() % 2);
    spec.m = 1 + static_cast<int>(rng() % 4);
    spec.kind = static_cast<Kind>(rng() % 3);
    spec.mixed_externality = (rng() % 2) == 0;
    spec.correlated = (rng() % 2) == 0;
    spec.seed = rng();
    spec.max_den = 4;
    out.push_back(gen_instance(spec));
  }
  return out;
}

}  // namespace

TEST_CASE("envy checkers agree with the reference definitions") {
  for (const Instance2D& inst : random_corpus(2024, 30)) {
    for (Space sp : {Space::V, Space::W}) {
      const ValueSystem vs = ValueSystem::for_2d(inst, sp);
      const uint64_t total = allocation_count(inst.n, inst.m);
      for (uint64_t idx = 0; idx < total; ++idx) {
        const Allocation a = allocation_at(inst.n, inst.m, idx);
        CHECK(check_envy(vs, a, EnvyLevel::EF).holds == ref_ef(vs, a));
        CHECK(check_envy(vs, a, EnvyLevel::EF1).holds == ref_ef1(vs, a));
        // EFX implies EF1 implies "EF or some removal works"
        if (check_envy(vs, a, EnvyLevel::EFX).holds)
          CHECK(check_envy(vs, a, EnvyLevel::EF1).holds);
        if (check_envy(vs, a, EnvyLevel::EF).holds)
          CHECK(check_envy(vs, a, EnvyLevel::EFX).holds);
      }
    }
  }
}

TEST_CASE("failed envy verdicts carry a checkable witness") {
  for (const Instance2D& inst : random_corpus(77, 15)) {
    const ValueSystem vs = ValueSystem::for_2d(inst, Space::V);
    const uint64_t total = allocation_count(inst.n, inst.m);
    for (uint64_t idx = 0; idx < total; ++idx) {
      const Allocation a = allocation_at(inst.n, inst.m, idx);
      const Verdict v = check_envy(vs, a, EnvyLevel::EF);
      if (v.holds) continue;
      REQUIRE(v.agent.has_value());
      REQUIRE(v.other_agent.has_value());
      REQUIRE(v.lhs.has_value());
      REQUIRE(v.rhs.has_value());
      CHECK(*v.lhs < *v.rhs);
      CHECK(*v.lhs == vs.utility(*v.agent, a));
      CHECK(*v.rhs == ref_swap_value(vs, *v.agent, a, *v.other_agent));
    }
  }
}

TEST_CASE("one dimensional proportionality") {
  Instance1D inst;
  inst.n = 2;
  inst.m = 3;
  inst.item_ids = {"g1", "g2", "g3"};
  inst.w = {Rational(4), Rational(2), Rational(2),
            Rational(3), Rational(3), Rational(2)};
  // agent 0 needs >= 4, agent 1 needs >= 4
  CHECK(check_prop(inst, Allocation({0, 1, 1})).holds);
  const Verdict bad = check_prop(inst, Allocation({1, 0, 1}));
  CHECK_FALSE(bad.holds);
  CHECK(*bad.agent == 0);
  CHECK(*bad.lhs == Rational(2));
  CHECK(*bad.rhs == Rational(4));
}

TEST_CASE("externality aware proportionality matches the reference") {
  for (const Instance2D& inst : random_corpus(31337, 30)) {
    for (Space sp : {Space::V, Space::W}) {
      const ValueSystem vs = ValueSystem::for_2d(inst, sp);
      const uint64_t total = allocation_count(inst.n, inst.m);
      for (uint64_t idx = 0; idx < total; ++idx) {
        const Allocation a = allocation_at(inst.n, inst.m, idx);
        CHECK(check_prop_e(vs, a, PropELevel::PROP_E).holds == ref_prop_e(vs, a, 0));
        CHECK(check_prop_e(vs, a, PropELevel::PROP1_E).holds == ref_prop_e(vs, a, 1));
        CHECK(check_prop_e(vs, a, PropELevel::PROPX_E).holds == ref_prop_e(vs, a, 2));
      }
    }
  }
}

TEST_CASE("average share matches the closed form and PROP-E in two dimensions") {
  for (const Instance2D& inst : random_corpus(4242, 30)) {
    const ValueSystem vs = ValueSystem::for_2d(inst, Space::V);
    const uint64_t total = allocation_count(inst.n, inst.m);
    for (uint64_t idx = 0; idx < total; ++idx) {
      const Allocation a = allocation_at(inst.n, inst.m, idx);
      const bool avg = check_average_share(inst, a).holds;
      CHECK(avg == ref_avg_share(inst, a));
      CHECK(avg == check_prop_e(vs, a, PropELevel::PROP_E).holds);
    }
  }
}

TEST_CASE("full externality checkers reduce to the 2-D ones") {
  // embed a 2-D instance as recipient-independent full externalities
  for (const Instance2D& inst : random_corpus(555, 10)) {
    FullInstance full;
    full.n = inst.n;
    full.m = inst.m;
    full.v_full.assign(static_cast<size_t>(inst.n) * inst.n * inst.m, Rational(0));
    for (int i = 0; i < inst.n; ++i)
      for (int j = 0; j < inst.n; ++j)
        for (int k = 0; k < inst.m; ++k)
          full.value(i, j, k) = i == j ? inst.value(i, k) : inst.extern_value(i, k);
    const ValueSystem vs = ValueSystem::for_2d(inst, Space::V);
    const uint64_t total = allocation_count(inst.n, inst.m);
    for (uint64_t idx = 0; idx < total; idx += 3) {
      const Allocation a = allocation_at(inst.n, inst.m, idx);
      CHECK(check_prop_e_full(full, a).holds ==
            check_prop_e(vs, a, PropELevel::PROP_E).holds);
      CHECK(check_average_share_full(full, a).holds == check_average_share(inst, a).holds);
    }
  }
}

TEST_CASE("equitability checkers") {
  Instance1D inst;
  inst.n = 2;
  inst.m = 2;
  inst.item_ids = {"g1", "g2"};
  inst.w = {Rational(3), Rational(1), Rational(1), Rational(3)};
  const ValueSystem vs = ValueSystem::for_1d(inst);
  CHECK(check_eq(vs, Allocation({0, 1}), EqLevel::EQ).holds);  // 3 vs 3
  CHECK(check_eq(vs, Allocation({1, 0}), EqLevel::EQ).holds);  // 1 vs 1
  CHECK_FALSE(check_eq(vs, Allocation({0, 0}), EqLevel::EQ).holds);  // 4 vs 0
  for (const Instance2D& two : random_corpus(808, 20)) {
    const ValueSystem sys = ValueSystem::for_2d(two, Space::V);
    const uint64_t total = allocation_count(two.n, two.m);
    for (uint64_t idx = 0; idx < total; ++idx) {
      const Allocation a = allocation_at(two.n, two.m, idx);
      bool ref_eq = true, ref_eq1 = true, ref_eqx = true;
      for (int i = 0; i < two.n && (ref_eq || ref_eq1 || ref_eqx); ++i) {
        for (int j = 0; j < two.n; ++j) {
          if (i == j) continue;
          const Rational ui = sys.utility(i, a);
          const Rational uj = sys.bundle_value(j, a.bundle_mask(j));
          if (ui != uj) ref_eq = false;
          if (ui < uj) {
            bool fixed = false;
            for (int k = 0; k < two.m && !fixed; ++k) {
              if (a.agent_of(k) == i)
                fixed = sys.bundle_value(i, a.bundle_mask(i) & ~(uint64_t(1) << k)) >= uj;
              else if (a.agent_of(k) == j)
                fixed = ui >= sys.bundle_value(j, a.bundle_mask(j) & ~(uint64_t(1) << k));
            }
            if (!fixed) ref_eq1 = false;
          }
          for (int k = 0; k < two.m; ++k) {
            const bool goodish = sys.item_class(i, k) != ItemClass::Chore;
            if (a.agent_of(k) == j && goodish) {
              if (ui < sys.bundle_value(j, a.bundle_mask(j) & ~(uint64_t(1) << k)))
                ref_eqx = false;
            }
            if (a.agent_of(k) == i && !goodish) {
              if (sys.bundle_value(i, a.bundle_mask(i) & ~(uint64_t(1) << k)) < uj)
                ref_eqx = false;
            }
          }
        }
      }
      CHECK(check_eq(sys, a, EqLevel::EQ).holds == ref_eq);
      CHECK(check_eq(sys, a, EqLevel::EQ1).holds == ref_eq1);
      CHECK(check_eq(sys, a, EqLevel::EQX).holds == ref_eqx);
      if (ref_eq) CHECK(ref_eq1);
    }
  }
}

TEST_CASE("pareto check matches a direct dominance scan") {
  for (const Instance2D& inst : random_corpus(909, 12)) {
    const ValueSystem vs = ValueSystem::for_2d(inst, Space::V);
    const uint64_t total = allocation_count(inst.n, inst.m);
    std::vector<std::vector<Rational>> util(total);
    for (uint64_t idx = 0; idx < total; ++idx) {
      const Allocation a = allocation_at(inst.n, inst.m, idx);
      for (int i = 0; i < inst.n; ++i) util[idx].push_back(vs.utility(i, a));
    }
    for (uint64_t idx = 0; idx < total; ++idx) {
      bool dominated = false;
      for (uint64_t other = 0; other < total && !dominated; ++other) {
        bool ge = true, strict = false;
        for (int i = 0; i < inst.n; ++i) {
          if (util[other][i] < util[idx][i]) ge = false;
          if (util[other][i] > util[idx][i]) strict = true;
        }
        dominated = ge && strict;
      }
      const Allocation a = allocation_at(inst.n, inst.m, idx);
      const Verdict v = check_pareto(vs, a);
      CHECK(v.holds == !dominated);
      if (!v.holds) {
        REQUIRE(v.dominator.has_value());
        bool ge = true, strict = false;
        for (int i = 0; i < inst.n; ++i) {
          const Rational du = vs.utility(i, *v.dominator);
          if (du < util[idx][i]) ge = false;
          if (du > util[idx][i]) strict = true;
        }
        CHECK(ge);
        CHECK(strict);
      }
    }
  }
}

TEST_CASE("welfare optimality checks against brute force") {
  for (const Instance2D& inst : random_corpus(7171, 10)) {
    const ValueSystem vs = ValueSystem::for_2d(inst, Space::V);
    const uint64_t total = allocation_count(inst.n, inst.m);
    Rational best_sum, best_min;
    std::vector<Rational> best_sorted;
    for (uint64_t idx = 0; idx < total; ++idx) {
      const Allocation a = allocation_at(inst.n, inst.m, idx);
      Rational sum = 0, mn;
      std::vector<Rational> sorted;
      for (int i = 0; i < inst.n; ++i) {
        const Rational u = vs.utility(i, a);
        sum += u;
        sorted.push_back(u);
        if (i == 0 || u < mn) mn = u;
      }
      std::sort(sorted.begin(), sorted.end());
      if (idx == 0 || sum > best_sum) best_sum = sum;
      if (idx == 0 || mn > best_min) best_min = mn;
      if (idx == 0 || std::lexicographical_compare(best_sorted.begin(), best_sorted.end(),
                                                   sorted.begin(), sorted.end()))
        best_sorted = sorted;
    }
    for (uint64_t idx = 0; idx < total; idx += 2) {
      const Allocation a = allocation_at(inst.n, inst.m, idx);
      Rational sum = 0, mn;
      std::vector<Rational> sorted;
      for (int i = 0; i < inst.n; ++i) {
        const Rational u = vs.utility(i, a);
        sum += u;
        sorted.push_back(u);
        if (i == 0 || u < mn) mn = u;
      }
      std::sort(sorted.begin(), sorted.end());
      CHECK(check_welfare_opt(vs, a, WelfareObjective::MUW).holds == (sum == best_sum));
      CHECK(check_welfare_opt(vs, a, WelfareObjective::MEW).holds == (mn == best_min));
      CHECK(check_welfare_opt(vs, a, WelfareObjective::LEXIMIN_OPT).holds ==
            (sorted == best_sorted));
    }
  }
}

TEST_CASE("full externality gap search returns verified witnesses") {
  const auto prop_only = search_fullext_gap(3, 1, 4000, GapDirection::PropEOnly);
  REQUIRE(prop_only.has_value());
  CHECK(prop_only->prop_e_holds);
  CHECK_FALSE(prop_only->avg_share_holds);
  CHECK(check_prop_e_full(prop_only->instance, prop_only->alloc).holds);
  CHECK_FALSE(check_average_share_full(prop_only->instance, prop_only->alloc).holds);

  const auto avg_only = search_fullext_gap(3, 1, 4000, GapDirection::AvgShareOnly);
  REQUIRE(avg_only.has_value());
  CHECK_FALSE(avg_only->prop_e_holds);
  CHECK(avg_only->avg_share_holds);
  CHECK(check_average_share_full(avg_only->instance, avg_only->alloc).holds);
  CHECK_FALSE(check_prop_e_full(avg_only->instance, avg_only->alloc).holds);
}
