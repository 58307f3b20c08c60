#include "extfair/checkers.hpp"

#include <algorithm>
#include <random>

#include "extfair/enumerate.hpp"

namespace extfair {

namespace {

bool is_goodish(ItemClass c) { return c != ItemClass::Chore; }  // NEUTRAL counts as a good

Verdict fail_pair(int i, int j, std::optional<int> k, Rational lhs, Rational rhs) {
  Verdict v;
  v.holds = false;
  v.agent = i;
  v.other_agent = j;
  v.item = k;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

Verdict fail_agent(int i, Rational lhs, Rational rhs, std::optional<int> k = std::nullopt) {
  Verdict v;
  v.holds = false;
  v.agent = i;
  v.item = k;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

// Kind of the instance behind a value system, by marginal signs.
Kind system_kind(const ValueSystem& vs) {
  bool nonneg = true, nonpos = true;
  for (int i = 0; i < vs.agents(); ++i) {
    for (int k = 0; k < vs.items(); ++k) {
      const int s = sgn(vs.marginal(i, k));
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
  }
  return nonneg ? Kind::Goods : (nonpos ? Kind::Chores : Kind::Mixed);
}

}  // namespace

Verdict check_envy(const ValueSystem& vs, const Allocation& alloc, EnvyLevel level) {
  require_valid_allocation(vs.agents(), vs.items(), alloc);
  const int n = vs.agents();
  std::vector<uint64_t> masks(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) masks[static_cast<size_t>(i)] = alloc.bundle_mask(i);

  for (int i = 0; i < n; ++i) {
    const Rational own = vs.bundle_value(i, masks[static_cast<size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const uint64_t other_mask = masks[static_cast<size_t>(j)];
      const Rational other = vs.bundle_value(i, other_mask);
      const bool ef = own >= other;
      if (level == EnvyLevel::EF) {
        if (!ef) return fail_pair(i, j, std::nullopt, own, other);
        continue;
      }
      if (level == EnvyLevel::EF1) {
        if (ef) continue;
        bool fixed = false;
        for (int k = 0; k < vs.items() && !fixed; ++k) {
          const uint64_t bit = uint64_t(1) << k;
          if (masks[static_cast<size_t>(i)] & bit) {
            fixed = vs.bundle_value(i, masks[static_cast<size_t>(i)] & ~bit) >= other;
          } else if (other_mask & bit) {
            fixed = own >= vs.bundle_value(i, other_mask & ~bit);
          }
        }
        if (!fixed) return fail_pair(i, j, std::nullopt, own, other);
        continue;
      }
      // EFX: every chore removable from own bundle and every good removable
      // from the other bundle must kill the envy.
      for (int k = 0; k < vs.items(); ++k) {
        const uint64_t bit = uint64_t(1) << k;
        if ((masks[static_cast<size_t>(i)] & bit) && vs.item_class(i, k) == ItemClass::Chore) {
          const Rational lhs = vs.bundle_value(i, masks[static_cast<size_t>(i)] & ~bit);
          if (lhs < other) return fail_pair(i, j, k, lhs, other);
        }
        if ((other_mask & bit) && is_goodish(vs.item_class(i, k))) {
          const Rational rhs = vs.bundle_value(i, other_mask & ~bit);
          if (own < rhs) return fail_pair(i, j, k, own, rhs);
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict check_prop(const Instance1D& instance, const Allocation& alloc) {
  require_valid_allocation(instance.n, instance.m, alloc);
  for (int i = 0; i < instance.n; ++i) {
    Rational total = 0;
    for (int k = 0; k < instance.m; ++k) total += instance.value(i, k);
    const Rational threshold = total / instance.n;
    const Rational u = utility_1d(instance, i, alloc);
    if (u < threshold) return fail_agent(i, u, threshold);
  }
  return Verdict::ok();
}

Verdict check_prop_e(const ValueSystem& vs, const Allocation& alloc, PropELevel level) {
  require_valid_allocation(vs.agents(), vs.items(), alloc);
  const int n = vs.agents();
  std::vector<uint64_t> masks(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) masks[static_cast<size_t>(j)] = alloc.bundle_mask(j);

  for (int i = 0; i < n; ++i) {
    Rational threshold = 0;
    for (int j = 0; j < n; ++j) threshold += vs.bundle_value(i, masks[static_cast<size_t>(j)]);
    threshold /= n;
    const uint64_t own = masks[static_cast<size_t>(i)];
    const Rational u = vs.bundle_value(i, own);
    const bool base = u >= threshold;

    if (level == PropELevel::PROP_E) {
      if (!base) return fail_agent(i, u, threshold);
      continue;
    }
    if (level == PropELevel::PROP1_E) {
      if (base) continue;
      bool fixed = false;
      for (int k = 0; k < vs.items() && !fixed; ++k) {
        const uint64_t bit = uint64_t(1) << k;
        fixed = vs.bundle_value(i, (own & bit) ? own & ~bit : own | bit) >= threshold;
      }
      if (!fixed) return fail_agent(i, u, threshold);
      continue;
    }
    // PROPX-E: adding any outside good / removing any held chore must reach
    // the threshold.
    for (int k = 0; k < vs.items(); ++k) {
      const uint64_t bit = uint64_t(1) << k;
      if (!(own & bit) && is_goodish(vs.item_class(i, k))) {
        const Rational lhs = vs.bundle_value(i, own | bit);
        if (lhs < threshold) return fail_agent(i, lhs, threshold, k);
      }
      if ((own & bit) && vs.item_class(i, k) == ItemClass::Chore) {
        const Rational lhs = vs.bundle_value(i, own & ~bit);
        if (lhs < threshold) return fail_agent(i, lhs, threshold, k);
      }
    }
  }
  return Verdict::ok();
}

namespace {

Allocation swap_bundles(const Allocation& alloc, int a, int b) {
  Allocation out = alloc;
  for (int& x : out.assignment) {
    if (x == a)
      x = b;
    else if (x == b)
      x = a;
  }
  return out;
}

}  // namespace

Verdict check_prop_e_full(const FullInstance& instance, const Allocation& alloc) {
  instance.validate();
  require_valid_allocation(instance.n, instance.m, alloc);
  for (int i = 0; i < instance.n; ++i) {
    // u_i(A_j) in the full model: agent i's utility when bundles i and j
    // trade places.
    Rational threshold = 0;
    for (int j = 0; j < instance.n; ++j)
      threshold += utility_full(instance, i, swap_bundles(alloc, i, j));
    threshold /= instance.n;
    const Rational u = utility_full(instance, i, alloc);
    if (u < threshold) return fail_agent(i, u, threshold);
  }
  return Verdict::ok();
}

Verdict check_average_share(const Instance2D& instance, const Allocation& alloc) {
  instance.validate();
  require_valid_allocation(instance.n, instance.m, alloc);
  for (int i = 0; i < instance.n; ++i) {
    Rational share = 0;
    for (int k = 0; k < instance.m; ++k)
      share += instance.value(i, k) + (instance.n - 1) * instance.extern_value(i, k);
    share /= instance.n;
    const Rational u = utility_2d(instance, i, alloc);
    if (u < share) return fail_agent(i, u, share);
  }
  return Verdict::ok();
}

Verdict check_average_share_full(const FullInstance& instance, const Allocation& alloc) {
  instance.validate();
  require_valid_allocation(instance.n, instance.m, alloc);
  for (int i = 0; i < instance.n; ++i) {
    Rational share = 0;
    for (int j = 0; j < instance.n; ++j)
      for (int k = 0; k < instance.m; ++k) share += instance.value(i, j, k);
    share /= instance.n;
    const Rational u = utility_full(instance, i, alloc);
    if (u < share) return fail_agent(i, u, share);
  }
  return Verdict::ok();
}

Verdict check_mms_family(const ValueSystem& vs, const Allocation& alloc, MmsVariant variant,
                         const MmsCheckInput& profile, const std::optional<Rational>& alpha) {
  require_valid_allocation(vs.agents(), vs.items(), alloc);
  const int n = vs.agents();
  if (profile.mu.size() != static_cast<size_t>(n))
    throw Error(Errc::MissingProfile, "mms profile must supply mu for every agent");

  const bool needs_alpha = variant == MmsVariant::ALPHA_MMS ||
                           variant == MmsVariant::SHIFTED_ALPHA_MMS ||
                           variant == MmsVariant::ALPHA_MMS_I ||
                           variant == MmsVariant::ALPHA_MMS_II;
  if (needs_alpha && !alpha) throw Error(Errc::BadAlpha, "variant requires alpha");
  if (alpha && (*alpha < 0 || *alpha > 1)) throw Error(Errc::BadAlpha, "alpha outside [0,1]");

  Kind kind = Kind::Mixed;
  if (variant == MmsVariant::SHIFTED_ALPHA_MMS || variant == MmsVariant::ALPHA_MMS_I ||
      variant == MmsVariant::ALPHA_MMS_II) {
    kind = system_kind(vs);
    if (kind == Kind::Mixed)
      throw Error(Errc::Unsupported, "alpha-MMS variants are defined for goods or chores only");
  }
  if (variant == MmsVariant::SHIFTED_ALPHA_MMS && profile.shift.size() != static_cast<size_t>(n))
    throw Error(Errc::MissingProfile, "shifted alpha-MMS needs v'_i(M) per agent");
  if ((variant == MmsVariant::ALPHA_MMS_I || variant == MmsVariant::ALPHA_MMS_II) &&
      (profile.mu_plus.size() != static_cast<size_t>(n) ||
       profile.mu_minus.size() != static_cast<size_t>(n)))
    throw Error(Errc::MissingProfile, "appendix variants need mu+/mu- per agent");

  for (int i = 0; i < n; ++i) {
    const uint64_t own = alloc.bundle_mask(i);
    const Rational u = vs.bundle_value(i, own);
    const Rational& mu = profile.mu[static_cast<size_t>(i)];

    switch (variant) {
      case MmsVariant::MMS:
        if (u < mu) return fail_agent(i, u, mu);
        break;
      case MmsVariant::ALPHA_MMS: {
        Rational bound;
        if (mu >= 0) {
          bound = *alpha * mu;
        } else {
          if (*alpha == 0) throw Error(Errc::BadAlpha, "alpha must be positive when mu < 0");
          bound = mu / *alpha;
        }
        if (u < bound) return fail_agent(i, u, bound);
        break;
      }
      case MmsVariant::SHIFTED_ALPHA_MMS: {
        if (*alpha == 0) throw Error(Errc::BadAlpha, "shifted alpha-MMS needs alpha in (0,1]");
        const Rational& sh = profile.shift[static_cast<size_t>(i)];
        const Rational bound = kind == Kind::Goods
                                   ? Rational(*alpha * mu + (1 - *alpha) * sh)
                                   : Rational(mu / *alpha + (*alpha - 1) / *alpha * sh);
        if (u < bound) return fail_agent(i, u, bound);
        break;
      }
      case MmsVariant::MMS1: {
        if (u >= mu) break;
        bool fixed = false;
        for (int k = 0; k < vs.items() && !fixed; ++k) {
          const uint64_t bit = uint64_t(1) << k;
          fixed = vs.bundle_value(i, (own & bit) ? own & ~bit : own | bit) >= mu;
        }
        if (!fixed) return fail_agent(i, u, mu);
        break;
      }
      case MmsVariant::MMSX: {
        for (int k = 0; k < vs.items(); ++k) {
          const uint64_t bit = uint64_t(1) << k;
          if (!(own & bit) && is_goodish(vs.item_class(i, k))) {
            const Rational lhs = vs.bundle_value(i, own | bit);
            if (lhs < mu) return fail_agent(i, lhs, mu, k);
          }
          if ((own & bit) && vs.item_class(i, k) == ItemClass::Chore) {
            const Rational lhs = vs.bundle_value(i, own & ~bit);
            if (lhs < mu) return fail_agent(i, lhs, mu, k);
          }
        }
        break;
      }
      case MmsVariant::ALPHA_MMS_I: {
        const Rational bound = *alpha * profile.mu_plus[static_cast<size_t>(i)] +
                               (1 + *alpha) * profile.mu_minus[static_cast<size_t>(i)];
        if (u < bound) return fail_agent(i, u, bound);
        break;
      }
      case MmsVariant::ALPHA_MMS_II: {
        if (*alpha == 0) throw Error(Errc::BadAlpha, "alpha-MMS (II) needs alpha in (0,1]");
        const Rational bound = *alpha * profile.mu_plus[static_cast<size_t>(i)] +
                               profile.mu_minus[static_cast<size_t>(i)] / *alpha;
        if (u < bound) return fail_agent(i, u, bound);
        break;
      }
    }
  }
  return Verdict::ok();
}

Verdict check_eq(const ValueSystem& vs, const Allocation& alloc, EqLevel level) {
  require_valid_allocation(vs.agents(), vs.items(), alloc);
  const int n = vs.agents();
  std::vector<uint64_t> masks(static_cast<size_t>(n));
  std::vector<Rational> u(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    masks[static_cast<size_t>(i)] = alloc.bundle_mask(i);
    u[static_cast<size_t>(i)] = vs.bundle_value(i, masks[static_cast<size_t>(i)]);
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational& ui = u[static_cast<size_t>(i)];
      const Rational& uj = u[static_cast<size_t>(j)];
      if (level == EqLevel::EQ) {
        if (ui != uj) return fail_pair(i, j, std::nullopt, ui, uj);
        continue;
      }
      if (level == EqLevel::EQ1) {
        if (ui >= uj) continue;
        bool fixed = false;
        for (int k = 0; k < vs.items() && !fixed; ++k) {
          const uint64_t bit = uint64_t(1) << k;
          if (masks[static_cast<size_t>(i)] & bit) {
            fixed = vs.bundle_value(i, masks[static_cast<size_t>(i)] & ~bit) >= uj;
          } else if (masks[static_cast<size_t>(j)] & bit) {
            fixed = ui >= vs.bundle_value(j, masks[static_cast<size_t>(j)] & ~bit);
          }
        }
        if (!fixed) return fail_pair(i, j, std::nullopt, ui, uj);
        continue;
      }
      // EQX
      for (int k = 0; k < vs.items(); ++k) {
        const uint64_t bit = uint64_t(1) << k;
        if ((masks[static_cast<size_t>(j)] & bit) && is_goodish(vs.item_class(i, k))) {
          const Rational rhs = vs.bundle_value(j, masks[static_cast<size_t>(j)] & ~bit);
          if (ui < rhs) return fail_pair(i, j, k, ui, rhs);
        }
        if ((masks[static_cast<size_t>(i)] & bit) && vs.item_class(i, k) == ItemClass::Chore) {
          const Rational lhs = vs.bundle_value(i, masks[static_cast<size_t>(i)] & ~bit);
          if (lhs < uj) return fail_pair(i, j, k, lhs, uj);
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict check_pareto(const ValueSystem& vs, const Allocation& alloc, int threads) {
  require_valid_allocation(vs.agents(), vs.items(), alloc);
  const int n = vs.agents();
  const uint64_t total = allocation_count(n, vs.items());
  std::vector<Rational> base(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = vs.utility(i, alloc);
  const uint64_t self = allocation_index(n, alloc);

  using Partial = std::optional<uint64_t>;
  PartitionScanner scanner(vs);
  Partial found = parallel_scan<Partial>(
      total, threads,
      [&](uint64_t lo, uint64_t hi) -> Partial {
        Partial best;
        scanner.run(lo, hi, [&](uint64_t idx, const std::vector<Rational>& sums,
                                const std::vector<uint8_t>&) {
          if (best || idx == self) return;
          bool some_strict = false;
          for (int i = 0; i < n; ++i) {
            const Rational& ui = sums[static_cast<size_t>(i) * n + i];
            const int cmp = ui.compare(base[static_cast<size_t>(i)]);
            if (cmp < 0) return;
            if (cmp > 0) some_strict = true;
          }
          if (some_strict) best = idx;
        });
        return best;
      },
      [](Partial a, Partial b) { return a ? a : b; });

  if (!found) return Verdict::ok();
  Verdict v;
  v.holds = false;
  v.dominator = allocation_at(n, vs.items(), *found);
  return v;
}

Verdict check_welfare_opt(const ValueSystem& vs, const Allocation& alloc,
                          WelfareObjective objective, int threads) {
  require_valid_allocation(vs.agents(), vs.items(), alloc);
  const int n = vs.agents();
  const uint64_t total = allocation_count(n, vs.items());

  std::vector<Rational> base_u(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) base_u[static_cast<size_t>(i)] = vs.utility(i, alloc);

  auto objective_better = [&](const std::vector<Rational>& sums) -> bool {
    switch (objective) {
      case WelfareObjective::MUW: {
        Rational s = 0, b = 0;
        for (int i = 0; i < n; ++i) {
          s += sums[static_cast<size_t>(i) * n + i];
          b += base_u[static_cast<size_t>(i)];
        }
        return s > b;
      }
      case WelfareObjective::MEW: {
        Rational mn = sums[0], bn = base_u[0];
        for (int i = 1; i < n; ++i) {
          mn = std::min(mn, sums[static_cast<size_t>(i) * n + i]);
          bn = std::min(bn, base_u[static_cast<size_t>(i)]);
        }
        return mn > bn;
      }
      case WelfareObjective::LEXIMIN_OPT: {
        std::vector<Rational> a(static_cast<size_t>(n)), b = base_u;
        for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = sums[static_cast<size_t>(i) * n + i];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
      }
    }
    return false;
  };

  using Partial = std::optional<uint64_t>;
  PartitionScanner scanner(vs);
  Partial found = parallel_scan<Partial>(
      total, threads,
      [&](uint64_t lo, uint64_t hi) -> Partial {
        Partial best;
        scanner.run(lo, hi, [&](uint64_t idx, const std::vector<Rational>& sums,
                                const std::vector<uint8_t>&) {
          if (!best && objective_better(sums)) best = idx;
        });
        return best;
      },
      [](Partial a, Partial b) { return a ? a : b; });

  if (!found) return Verdict::ok();
  Verdict v;
  v.holds = false;
  v.dominator = allocation_at(n, vs.items(), *found);
  return v;
}

std::optional<GapResult> search_fullext_gap(int m, uint64_t seed, uint64_t trials,
                                            GapDirection want) {
  if (m < 0 || m > 6) throw Error(Errc::BadArgument, "gap search supports m <= 6");
  const int n = 3;
  std::mt19937_64 rng(seed);
  const uint64_t total = allocation_count(n, m);

  for (uint64_t t = 0; t < trials; ++t) {
    FullInstance inst;
    inst.n = n;
    inst.m = m;
    inst.v_full.resize(static_cast<size_t>(n) * n * m);
    for (Rational& x : inst.v_full)
      x = Rational(static_cast<long>(rng() % 11) - 5);

    for (uint64_t idx = 0; idx < total; ++idx) {
      const Allocation alloc = allocation_at(n, m, idx);
      const bool pe = check_prop_e_full(inst, alloc).holds;
      const bool avg = check_average_share_full(inst, alloc).holds;
      if (pe == avg) continue;
      if (want == GapDirection::PropEOnly && !pe) continue;
      if (want == GapDirection::AvgShareOnly && !avg) continue;
      return GapResult{std::move(inst), alloc, pe, avg, t};
    }
  }
  return std::nullopt;
}

}  // namespace extfair
