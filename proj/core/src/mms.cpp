#include "extfair/mms.hpp"

#include <algorithm>
#include <utility>

#include "extfair/enumerate.hpp"

namespace extfair {

namespace {

struct Best {
  bool init = false;
  Rational mu;
  uint64_t idx = 0;
  int min_bundle = 0;
};

// Better = larger maximin value; ties go to the earlier allocation index so
// the canonical partition is scan-order independent.
void take(Best& acc, const Best& cand) {
  if (!cand.init) return;
  if (!acc.init || cand.mu > acc.mu || (cand.mu == acc.mu && cand.idx < acc.idx)) acc = cand;
}

// Maximin data for every agent in one exhaustive scan of the value system.
std::vector<Best> scan_all_agents(const ValueSystem& vs, int threads) {
  const int n = vs.agents();
  const uint64_t total = allocation_count(n, vs.items());
  using Partial = std::vector<Best>;
  PartitionScanner scanner(vs);
  return parallel_scan<Partial>(
      total, threads,
      [&](uint64_t lo, uint64_t hi) {
        Partial best(static_cast<size_t>(n));
        scanner.run(lo, hi, [&](uint64_t idx, const std::vector<Rational>& sums,
                                const std::vector<uint8_t>&) {
          for (int a = 0; a < n; ++a) {
            int minb = 0;
            for (int b = 1; b < n; ++b)
              if (sums[static_cast<size_t>(a) * n + b] < sums[static_cast<size_t>(a) * n + minb])
                minb = b;
            Best cand{true, sums[static_cast<size_t>(a) * n + minb], idx, minb};
            take(best[static_cast<size_t>(a)], cand);
          }
        });
        return best;
      },
      [n](Partial acc, Partial part) {
        for (int a = 0; a < n; ++a) take(acc[static_cast<size_t>(a)], part[static_cast<size_t>(a)]);
        return acc;
      });
}

MmsShare to_share(const Best& b, int n, int m) {
  return MmsShare{b.mu, allocation_at(n, m, b.idx), b.min_bundle};
}

}  // namespace

MmsCheckInput MmsProfile::check_input(Space space) const {
  MmsCheckInput in;
  bool decomposed = true;
  for (const MmsAgentProfile& a : agents) {
    in.mu.push_back(space == Space::W ? a.mu_w : a.mu_v);
    in.shift.push_back(a.shift);
    decomposed = decomposed && a.mu_plus && a.mu_minus;
  }
  if (decomposed) {
    for (const MmsAgentProfile& a : agents) {
      in.mu_plus.push_back(*a.mu_plus);
      in.mu_minus.push_back(*a.mu_minus);
    }
  }
  return in;
}

MmsShare mms_share(const Instance2D& instance, int agent, Space space, int threads) {
  instance.validate();
  if (space == Space::Full) throw Error(Errc::WrongSpace, "mms_share needs space V or W");
  const ValueSystem vs = ValueSystem::for_2d(instance, space);
  return to_share(scan_all_agents(vs, threads)[static_cast<size_t>(agent)], instance.n,
                  instance.m);
}

MmsShare mms_share_1d(const Instance1D& instance, int agent, int threads) {
  instance.validate();
  const ValueSystem vs = ValueSystem::for_1d(instance);
  return to_share(scan_all_agents(vs, threads)[static_cast<size_t>(agent)], instance.n,
                  instance.m);
}

std::pair<Rational, Rational> mms_decompose(const Instance2D& instance, int agent,
                                            const MmsShare& v_share) {
  const Kind kind = classify(instance).kind;
  if (kind == Kind::Mixed)
    throw Error(Errc::Unsupported, "mu decomposition is defined for goods or chores only");
  const uint64_t mask = v_share.partition.bundle_mask(v_share.min_bundle);
  Rational in_part = 0, out_part = 0;
  for (int k = 0; k < instance.m; ++k) {
    if (mask & (uint64_t(1) << k))
      in_part += instance.value(agent, k);
    else
      out_part += instance.extern_value(agent, k);
  }
  // goods: assigned items carry the positive part; chores: the relief of the
  // items someone else took does.
  if (kind == Kind::Goods) return {in_part, out_part};
  return {out_part, in_part};
}

MmsProfile mms_profile(const Instance2D& instance, int threads) {
  instance.validate();
  const std::vector<Best> best_v =
      scan_all_agents(ValueSystem::for_2d(instance, Space::V), threads);
  const std::vector<Best> best_w =
      scan_all_agents(ValueSystem::for_2d(instance, Space::W), threads);
  const bool pure = classify(instance).kind != Kind::Mixed;

  MmsProfile profile;
  for (int i = 0; i < instance.n; ++i) {
    MmsAgentProfile a;
    const MmsShare share = to_share(best_v[static_cast<size_t>(i)], instance.n, instance.m);
    a.mu_v = share.mu;
    a.mu_w = best_w[static_cast<size_t>(i)].mu;
    a.shift = 0;
    for (int k = 0; k < instance.m; ++k) a.shift += instance.extern_value(i, k);
    a.canonical_partition = share.partition;
    a.min_bundle = share.min_bundle;
    if (pure) {
      auto [plus, minus] = mms_decompose(instance, i, share);
      a.mu_plus = plus;
      a.mu_minus = minus;
    }
    profile.agents.push_back(std::move(a));
  }
  return profile;
}

bool verify_shift_identity(const Instance2D& instance, const MmsProfile& profile) {
  if (profile.agents.size() != static_cast<size_t>(instance.n)) return false;
  for (int i = 0; i < instance.n; ++i) {
    Rational shift = 0;
    for (int k = 0; k < instance.m; ++k) shift += instance.extern_value(i, k);
    const MmsAgentProfile& a = profile.agents[static_cast<size_t>(i)];
    if (a.mu_v != a.mu_w + shift || a.shift != shift) return false;
  }
  return true;
}

namespace {

// Feasible-alpha interval for one allocation under a linear variant. All
// constraints have the form c*alpha <= r; needs_pos records 1/alpha usage.
struct AlphaInterval {
  Rational lo = 0;
  Rational hi = 1;
  bool feasible = true;
  bool needs_pos = false;

  void constrain(const Rational& c, const Rational& r) {
    const int s = sgn(c);
    if (s > 0)
      hi = std::min(hi, Rational(r / c));
    else if (s < 0)
      lo = std::max(lo, Rational(r / c));
    else if (r < 0)
      feasible = false;
  }

  bool ok() const { return feasible && lo <= hi && !(needs_pos && hi == 0); }
};

struct AlphaBest {
  bool found = false;
  Rational alpha;
  uint64_t idx = 0;
};

void take_alpha(AlphaBest& acc, const AlphaBest& cand) {
  if (!cand.found) return;
  if (!acc.found || cand.alpha > acc.alpha || (cand.alpha == acc.alpha && cand.idx < acc.idx))
    acc = cand;
}

BestAlphaResult best_alpha_linear(const Instance2D& instance, const MmsProfile& profile,
                                  MmsVariant variant, Kind kind, int threads) {
  const int n = instance.n;
  const ValueSystem vs = ValueSystem::for_2d(instance, Space::V);
  const uint64_t total = allocation_count(n, instance.m);

  bool zero_mu = false;
  if (variant == MmsVariant::ALPHA_MMS)
    for (const MmsAgentProfile& a : profile.agents) zero_mu = zero_mu || a.mu_v == 0;

  PartitionScanner scanner(vs);
  AlphaBest best = parallel_scan<AlphaBest>(
      total, threads,
      [&](uint64_t lo, uint64_t hi) {
        AlphaBest acc;
        scanner.run(lo, hi, [&](uint64_t idx, const std::vector<Rational>& sums,
                                const std::vector<uint8_t>&) {
          AlphaInterval iv;
          for (int i = 0; i < n && iv.feasible; ++i) {
            const Rational& u = sums[static_cast<size_t>(i) * n + i];
            const MmsAgentProfile& a = profile.agents[static_cast<size_t>(i)];
            switch (variant) {
              case MmsVariant::ALPHA_MMS:
                if (a.mu_v > 0) {
                  iv.constrain(a.mu_v, u);
                } else if (a.mu_v < 0) {
                  // u >= mu/alpha <=> alpha * (-u) <= -mu for alpha > 0
                  iv.needs_pos = true;
                  iv.constrain(-u, -a.mu_v);
                } else if (u < 0) {
                  iv.feasible = false;
                }
                break;
              case MmsVariant::SHIFTED_ALPHA_MMS:
                if (kind == Kind::Goods) {
                  iv.constrain(a.mu_v - a.shift, u - a.shift);
                } else {
                  iv.needs_pos = true;
                  iv.constrain(a.shift - u, a.shift - a.mu_v);
                }
                break;
              case MmsVariant::ALPHA_MMS_I:
                // u >= alpha*mu+ + (1+alpha)*mu-  <=>  alpha*mu_V <= u - mu-
                iv.constrain(*a.mu_plus + *a.mu_minus, u - *a.mu_minus);
                break;
              default:
                break;
            }
          }
          if (iv.ok()) take_alpha(acc, AlphaBest{true, iv.hi, idx});
        });
        return acc;
      },
      [](AlphaBest a, AlphaBest b) {
        take_alpha(a, b);
        return a;
      });

  BestAlphaResult out;
  out.zero_mu = zero_mu;
  if (!best.found) {
    out.kind = BestAlphaKind::None;
    return out;
  }
  out.witness = allocation_at(n, instance.m, best.idx);
  out.alpha = best.alpha;
  out.kind = best.alpha == 1 ? BestAlphaKind::All : BestAlphaKind::Value;
  return out;
}

BestAlphaResult best_alpha_quadratic(const Instance2D& instance, const MmsProfile& profile,
                                     int threads) {
  const int n = instance.n;
  for (const MmsAgentProfile& a : profile.agents)
    if (*a.mu_plus < 0 || *a.mu_minus > 0)
      throw Error(Errc::Unsupported,
                  "alpha-MMS (II) solver needs mu+ >= 0 and mu- <= 0 per agent");

  const ValueSystem vs = ValueSystem::for_2d(instance, Space::V);
  const uint64_t total = allocation_count(n, instance.m);
  PartitionScanner scanner(vs);
  using Partial = std::optional<uint64_t>;
  auto merge_first = [](Partial a, Partial b) { return a ? a : b; };

  // With mu+ >= 0 >= mu- each agent's feasible set is downward closed in
  // alpha, so per-allocation feasibility is monotone and a binary search on
  // the existential predicate is sound.
  auto exists_at = [&](const Rational& alpha) -> Partial {
    std::vector<Rational> threshold(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const MmsAgentProfile& a = profile.agents[static_cast<size_t>(i)];
      threshold[static_cast<size_t>(i)] = alpha * *a.mu_plus + *a.mu_minus / alpha;
    }
    return parallel_scan<Partial>(
        total, threads,
        [&](uint64_t lo, uint64_t hi) -> Partial {
          Partial found;
          scanner.run(lo, hi, [&](uint64_t idx, const std::vector<Rational>& sums,
                                  const std::vector<uint8_t>&) {
            if (found) return;
            for (int i = 0; i < n; ++i)
              if (sums[static_cast<size_t>(i) * n + i] < threshold[static_cast<size_t>(i)]) return;
            found = idx;
          });
          return found;
        },
        merge_first);
  };

  BestAlphaResult out;
  if (Partial at_one = exists_at(1)) {
    out.kind = BestAlphaKind::All;
    out.alpha = 1;
    out.witness = allocation_at(n, instance.m, *at_one);
    return out;
  }

  // Feasibility in the alpha -> 0+ limit: agents with mu- < 0 are eventually
  // satisfied by any bundle; an agent with mu- = 0 needs u > 0 (or u = 0 with
  // mu+ = 0). If no allocation passes, no alpha in (0,1] works at all.
  Partial near_zero = parallel_scan<Partial>(
      total, threads,
      [&](uint64_t lo, uint64_t hi) -> Partial {
        Partial found;
        scanner.run(lo, hi, [&](uint64_t idx, const std::vector<Rational>& sums,
                                const std::vector<uint8_t>&) {
          if (found) return;
          for (int i = 0; i < n; ++i) {
            const MmsAgentProfile& a = profile.agents[static_cast<size_t>(i)];
            if (*a.mu_minus < 0) continue;
            const Rational& u = sums[static_cast<size_t>(i) * n + i];
            if (u > 0 || (u == 0 && *a.mu_plus == 0)) continue;
            return;
          }
          found = idx;
        });
        return found;
      },
      merge_first);
  if (!near_zero) {
    out.kind = BestAlphaKind::None;
    return out;
  }

  Rational lo = 0, hi = 1;
  Partial witness;
  // Establish a feasible starting point by exponential descent, then bisect.
  for (int step = 0; step < 128 && lo == 0; ++step) {
    hi /= 2;
    if (Partial p = exists_at(hi)) {
      lo = hi;
      witness = p;
    }
  }
  if (lo == 0) {
    // Supremum below 2^-128; report the limit case as None with the flag set.
    out.kind = BestAlphaKind::None;
    out.approximate = true;
    return out;
  }
  hi = lo * 2 > 1 ? Rational(1) : Rational(lo * 2);
  for (int step = 0; step < 40; ++step) {
    const Rational mid = (lo + hi) / 2;
    if (Partial p = exists_at(mid)) {
      lo = mid;
      witness = p;
    } else {
      hi = mid;
    }
  }
  out.kind = BestAlphaKind::Value;
  out.alpha = lo;
  out.witness = allocation_at(n, instance.m, *witness);
  out.approximate = true;
  return out;
}

}  // namespace

BestAlphaResult best_alpha(const Instance2D& instance, const MmsProfile& profile,
                           MmsVariant variant, int threads) {
  instance.validate();
  if (profile.agents.size() != static_cast<size_t>(instance.n))
    throw Error(Errc::MissingProfile, "profile does not match the instance");

  const Kind kind = classify(instance).kind;
  switch (variant) {
    case MmsVariant::ALPHA_MMS:
      break;
    case MmsVariant::SHIFTED_ALPHA_MMS:
    case MmsVariant::ALPHA_MMS_I:
    case MmsVariant::ALPHA_MMS_II:
      if (kind == Kind::Mixed)
        throw Error(Errc::Unsupported, "alpha variants are defined for goods or chores only");
      break;
    default:
      throw Error(Errc::BadArgument, "best_alpha supports the alpha-parameterized variants");
  }
  if (variant == MmsVariant::ALPHA_MMS_I || variant == MmsVariant::ALPHA_MMS_II) {
    for (const MmsAgentProfile& a : profile.agents)
      if (!a.mu_plus || !a.mu_minus)
        throw Error(Errc::MissingProfile, "appendix variants need the mu decomposition");
  }

  if (variant == MmsVariant::ALPHA_MMS_II) return best_alpha_quadratic(instance, profile, threads);
  return best_alpha_linear(instance, profile, variant, kind, threads);
}

}  // namespace extfair
