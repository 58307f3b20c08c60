#include "extfair/allocators.hpp"

#include <algorithm>
#include <numeric>

#include "extfair/enumerate.hpp"

namespace extfair {

namespace {

// -1 all non-positive, +1 all non-negative, 0 genuinely mixed.
int uniform_sign(const Instance1D& instance) {
  bool nonneg = true, nonpos = true;
  for (const Rational& x : instance.w) {
    if (x < 0) nonneg = false;
    if (x > 0) nonpos = false;
  }
  return nonneg ? 1 : (nonpos ? -1 : 0);
}

void check_order(int n, const std::vector<int>& order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (i >= static_cast<int>(sorted.size()) || sorted[static_cast<size_t>(i)] != i)
      throw Error(Errc::BadArgument, "agent order must be a permutation of 0..n-1");
}

// Picker's favorite remaining item, lowest index on ties; -1 when the filter
// admits nothing.
template <class Admit>
int pick_best(const Instance1D& instance, int agent, const std::vector<bool>& taken,
              Admit&& admit) {
  int best = -1;
  for (int k = 0; k < instance.m; ++k) {
    if (taken[static_cast<size_t>(k)] || !admit(k)) continue;
    if (best == -1 || instance.value(agent, k) > instance.value(agent, best)) best = k;
  }
  return best;
}

}  // namespace

Allocation round_robin(const Instance1D& instance, const std::vector<int>& order) {
  instance.validate();
  if (uniform_sign(instance) == 0)
    throw Error(Errc::MixedSigns, "round robin needs an all-goods or all-chores instance");
  check_order(instance.n, order);

  Allocation out(std::vector<int>(static_cast<size_t>(instance.m), -1));
  std::vector<bool> taken(static_cast<size_t>(instance.m), false);
  for (int assigned = 0; assigned < instance.m;) {
    for (int agent : order) {
      const int k = pick_best(instance, agent, taken, [](int) { return true; });
      if (k == -1) break;
      taken[static_cast<size_t>(k)] = true;
      out.assignment[static_cast<size_t>(k)] = agent;
      ++assigned;
    }
  }
  return out;
}

Allocation double_round_robin(const Instance1D& instance) {
  instance.validate();
  const int n = instance.n;
  const int m = instance.m;
  Allocation out(std::vector<int>(static_cast<size_t>(m), -1));
  std::vector<bool> taken(static_cast<size_t>(m), true);  // phase-wise availability

  // Phase 1: items that are chores for everyone, padded with zero-valued
  // dummies to a multiple of n. A dummy beats any strict chore, so picking it
  // is the "skip" move.
  int universal_chores = 0;
  std::vector<bool> in_phase1(static_cast<size_t>(m), false);
  for (int k = 0; k < m; ++k) {
    bool all_neg = true;
    for (int i = 0; i < n && all_neg; ++i) all_neg = instance.value(i, k) < 0;
    if (all_neg) {
      in_phase1[static_cast<size_t>(k)] = true;
      taken[static_cast<size_t>(k)] = false;
      ++universal_chores;
    }
  }
  int dummies = (n - universal_chores % n) % n;
  for (int left = universal_chores; left > 0 || dummies > 0;) {
    for (int agent = 0; agent < n && (left > 0 || dummies > 0); ++agent) {
      const int k = pick_best(instance, agent, taken,
                              [&](int item) { return in_phase1[static_cast<size_t>(item)]; });
      if (dummies > 0 && (k == -1 || instance.value(agent, k) < 0)) {
        --dummies;  // dummy (value 0) preferred; it vanishes from the output
        continue;
      }
      if (k == -1) break;
      taken[static_cast<size_t>(k)] = true;
      out.assignment[static_cast<size_t>(k)] = agent;
      --left;
    }
  }

  // Phase 2: repeated reverse order (last agent first); each turn the agent
  // takes their favorite remaining item with positive value, passing
  // otherwise.
  for (int k = 0; k < m; ++k)
    taken[static_cast<size_t>(k)] = in_phase1[static_cast<size_t>(k)];
  while (true) {
    bool progressed = false;
    for (int t = 0; t < n; ++t) {
      const int agent = n - 1 - t;
      const int k = pick_best(instance, agent, taken,
                              [&](int item) { return instance.value(agent, item) > 0; });
      if (k == -1) continue;
      taken[static_cast<size_t>(k)] = true;
      out.assignment[static_cast<size_t>(k)] = agent;
      progressed = true;
    }
    if (!progressed) break;
  }

  // Anything left is worth <= 0 to everyone and exactly 0 to someone (a
  // universal strict chore would have been phase-1 material); park it with
  // the lowest-index indifferent agent, which cannot create new envy.
  for (int k = 0; k < m; ++k) {
    if (taken[static_cast<size_t>(k)]) continue;
    int target = 0;
    for (int i = 0; i < n; ++i) {
      if (instance.value(i, k) == 0) {
        target = i;
        break;
      }
      if (instance.value(i, k) > instance.value(target, k)) target = i;
    }
    out.assignment[static_cast<size_t>(k)] = target;
  }
  return out;
}

Allocation envy_cycle(const Instance1D& instance) {
  instance.validate();
  if (uniform_sign(instance) != 1)
    throw Error(Errc::MixedSigns, "envy-cycle elimination needs an all-goods instance");
  const int n = instance.n;
  Allocation out(std::vector<int>(static_cast<size_t>(instance.m), -1));
  std::vector<std::vector<int>> bundles(static_cast<size_t>(n));

  auto bundle_value = [&](int agent, int bundle) {
    Rational s = 0;
    for (int k : bundles[static_cast<size_t>(bundle)]) s += instance.value(agent, k);
    return s;
  };

  for (int k = 0; k < instance.m; ++k) {
    while (true) {
      std::vector<Rational> own(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) own[static_cast<size_t>(i)] = bundle_value(i, i);
      // lowest-index agent nobody envies
      int target = -1;
      std::vector<int> envier(static_cast<size_t>(n), -1);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          if (i == j) continue;
          if (own[static_cast<size_t>(i)] < bundle_value(i, j)) {
            envier[static_cast<size_t>(j)] = i;
            break;
          }
        }
        if (envier[static_cast<size_t>(j)] == -1 && target == -1) target = j;
      }
      if (target != -1) {
        bundles[static_cast<size_t>(target)].push_back(k);
        out.assignment[static_cast<size_t>(k)] = target;
        break;
      }
      // Everyone is envied, so walking "lowest-index envier" pointers must
      // loop; rotate bundles along that cycle (each envier takes the bundle
      // it envies).
      std::vector<int> seen_at(static_cast<size_t>(n), -1);
      std::vector<int> walk;
      int cur = 0;
      while (seen_at[static_cast<size_t>(cur)] == -1) {
        seen_at[static_cast<size_t>(cur)] = static_cast<int>(walk.size());
        walk.push_back(cur);
        cur = envier[static_cast<size_t>(cur)];
      }
      const int start = seen_at[static_cast<size_t>(cur)];
      std::vector<std::vector<int>> rotated = bundles;
      for (size_t t = static_cast<size_t>(start); t < walk.size(); ++t) {
        const int envied = walk[static_cast<size_t>(t)];
        const int who = envier[static_cast<size_t>(envied)];
        rotated[static_cast<size_t>(who)] = bundles[static_cast<size_t>(envied)];
      }
      bundles = std::move(rotated);
      for (int j = 0; j < n; ++j)
        for (int item : bundles[static_cast<size_t>(j)])
          out.assignment[static_cast<size_t>(item)] = j;
    }
  }
  return out;
}

Allocation bag_fill_half_mms(const Instance1D& instance, const std::vector<Rational>& mu_w) {
  instance.validate();
  if (uniform_sign(instance) != 1)
    throw Error(Errc::MixedSigns, "bag filling needs an all-goods instance");
  if (mu_w.size() != static_cast<size_t>(instance.n))
    throw Error(Errc::MissingProfile, "bag filling needs mu_W for every agent");
  const int n = instance.n;

  std::vector<int> item_order(static_cast<size_t>(instance.m));
  std::iota(item_order.begin(), item_order.end(), 0);
  std::stable_sort(item_order.begin(), item_order.end(), [&](int a, int b) {
    return instance.value(0, a) > instance.value(0, b);
  });

  Allocation out(std::vector<int>(static_cast<size_t>(instance.m), -1));
  std::vector<bool> active(static_cast<size_t>(n), true);
  size_t next = 0;
  int last_served = -1;

  for (int round = 0; round < n; ++round) {
    std::vector<int> bag;
    std::vector<Rational> bag_value(static_cast<size_t>(n), Rational(0));
    auto satisfied = [&]() {
      for (int i = 0; i < n; ++i)
        if (active[static_cast<size_t>(i)] &&
            2 * bag_value[static_cast<size_t>(i)] >= mu_w[static_cast<size_t>(i)])
          return i;
      return -1;
    };
    int winner = satisfied();
    while (winner == -1 && next < item_order.size()) {
      const int k = item_order[next++];
      bag.push_back(k);
      for (int i = 0; i < n; ++i) bag_value[static_cast<size_t>(i)] += instance.value(i, k);
      winner = satisfied();
    }
    if (winner == -1) {  // items ran out; hand the open bag to someone anyway
      for (int i = 0; i < n; ++i)
        if (active[static_cast<size_t>(i)]) {
          winner = i;
          break;
        }
    }
    for (int k : bag) out.assignment[static_cast<size_t>(k)] = winner;
    active[static_cast<size_t>(winner)] = false;
    last_served = winner;
  }
  while (next < item_order.size())  // leftovers only help their holder
    out.assignment[static_cast<size_t>(item_order[next++])] = std::max(last_served, 0);
  return out;
}

namespace {

// Returns +1 when a beats b under the objective, 0 on ties, -1 otherwise.
int compare_objective(OptObjective objective, const std::vector<Rational>& a,
                      const std::vector<Rational>& b) {
  const int n = static_cast<int>(a.size());
  auto cmp = [](const Rational& x, const Rational& y) { return x > y ? 1 : (x < y ? -1 : 0); };
  switch (objective) {
    case OptObjective::MUW: {
      Rational sa = 0, sb = 0;
      for (int i = 0; i < n; ++i) {
        sa += a[static_cast<size_t>(i)];
        sb += b[static_cast<size_t>(i)];
      }
      return cmp(sa, sb);
    }
    case OptObjective::MEW: {
      Rational ma = a[0], mb = b[0];
      for (int i = 1; i < n; ++i) {
        ma = std::min(ma, a[static_cast<size_t>(i)]);
        mb = std::min(mb, b[static_cast<size_t>(i)]);
      }
      return cmp(ma, mb);
    }
    case OptObjective::LEXIMIN: {
      std::vector<Rational> sa = a, sb = b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      for (int i = 0; i < n; ++i) {
        const int c = cmp(sa[static_cast<size_t>(i)], sb[static_cast<size_t>(i)]);
        if (c != 0) return c;
      }
      return 0;
    }
    case OptObjective::MNW_ON_W: {
      Rational pa = 1, pb = 1;
      int ca = 0, cb = 0;
      Rational nza = 1, nzb = 1;
      for (int i = 0; i < n; ++i) {
        pa *= a[static_cast<size_t>(i)];
        pb *= b[static_cast<size_t>(i)];
        if (a[static_cast<size_t>(i)] != 0) {
          ++ca;
          nza *= a[static_cast<size_t>(i)];
        }
        if (b[static_cast<size_t>(i)] != 0) {
          ++cb;
          nzb *= b[static_cast<size_t>(i)];
        }
      }
      if (const int c = cmp(pa, pb); c != 0) return c;
      if (pa != 0) return 0;
      if (ca != cb) return ca > cb ? 1 : -1;
      return cmp(nza, nzb);
    }
  }
  return 0;
}

}  // namespace

Allocation exhaustive_opt(const ValueSystem& vs, OptObjective objective, int threads) {
  const int n = vs.agents();
  if (objective == OptObjective::MNW_ON_W) {
    if (vs.space() == Space::V)
      throw Error(Errc::WrongSpace, "MNW is computed on the 1-D (W) valuations");
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < vs.items(); ++k)
        if (vs.marginal(i, k) < 0)
          throw Error(Errc::MixedSigns, "MNW needs an all-goods instance");
  }
  const uint64_t total = allocation_count(n, vs.items());

  struct Best {
    bool init = false;
    uint64_t idx = 0;
    std::vector<Rational> utils;
  };
  PartitionScanner scanner(vs);
  Best best = parallel_scan<Best>(
      total, threads,
      [&](uint64_t lo, uint64_t hi) {
        Best acc;
        scanner.run(lo, hi, [&](uint64_t idx, const std::vector<Rational>& sums,
                                const std::vector<uint8_t>&) {
          std::vector<Rational> utils(static_cast<size_t>(n));
          for (int i = 0; i < n; ++i)
            utils[static_cast<size_t>(i)] = sums[static_cast<size_t>(i) * n + i];
          if (!acc.init || compare_objective(objective, utils, acc.utils) > 0)
            acc = Best{true, idx, std::move(utils)};
        });
        return acc;
      },
      [&](Best a, Best b) {
        if (!a.init) return b;
        if (b.init && compare_objective(objective, b.utils, a.utils) > 0) return b;
        return a;  // ties keep the earlier range, i.e. the smaller index
      });
  return allocation_at(n, vs.items(), best.idx);
}

std::optional<Allocation> search_predicate(const NotionEvaluator& eval,
                                           const std::vector<NotionRequest>& notions) {
  const ValueSystem& vs = eval.system();
  const uint64_t total = allocation_count(vs.agents(), vs.items());
  for (uint64_t idx = 0; idx < total; ++idx) {
    const Allocation alloc = allocation_at(vs.agents(), vs.items(), idx);
    bool all = true;
    for (const NotionRequest& req : notions) {
      if (!eval.check(req.notion, alloc, req.alpha).holds) {
        all = false;
        break;
      }
    }
    if (all) return alloc;
  }
  return std::nullopt;
}

}  // namespace extfair
