#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extfair/instance.hpp"

namespace extfair {

// Outcome of a fairness/efficiency check. When holds == false the witness
// fields reproduce the violated inequality when substituted back into the
// definition (lhs < rhs, or a dominating allocation).
struct Verdict {
  bool holds = true;
  std::optional<int> agent;
  std::optional<int> other_agent;
  std::optional<int> item;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::optional<Allocation> dominator;

  static Verdict ok() { return Verdict{}; }
};

enum class EnvyLevel { EF, EF1, EFX };
enum class PropELevel { PROP_E, PROP1_E, PROPX_E };
enum class EqLevel { EQ, EQ1, EQX };
enum class WelfareObjective { MUW, MEW, LEXIMIN_OPT };

enum class MmsVariant {
  MMS,
  ALPHA_MMS,
  SHIFTED_ALPHA_MMS,
  MMS1,
  MMSX,
  ALPHA_MMS_I,
  ALPHA_MMS_II,
};

// Per-agent thresholds for the MMS family. mu is the MMS share in the space
// being checked; shift = v'_i(M); mu_plus/mu_minus the canonical-partition
// decomposition (required only by the appendix variants).
struct MmsCheckInput {
  std::vector<Rational> mu;
  std::vector<Rational> shift;
  std::vector<Rational> mu_plus;
  std::vector<Rational> mu_minus;
};

Verdict check_envy(const ValueSystem& vs, const Allocation& alloc, EnvyLevel level);

// PROP is a 1-D notion only.
Verdict check_prop(const Instance1D& instance, const Allocation& alloc);

Verdict check_prop_e(const ValueSystem& vs, const Allocation& alloc, PropELevel level);
Verdict check_prop_e_full(const FullInstance& instance, const Allocation& alloc);

// Average share in 2-D: u_i(A_i) >= sum_k (v_ik + (n-1) v'_ik) / n.
Verdict check_average_share(const Instance2D& instance, const Allocation& alloc);
Verdict check_average_share_full(const FullInstance& instance, const Allocation& alloc);

Verdict check_mms_family(const ValueSystem& vs, const Allocation& alloc, MmsVariant variant,
                         const MmsCheckInput& profile,
                         const std::optional<Rational>& alpha = std::nullopt);

Verdict check_eq(const ValueSystem& vs, const Allocation& alloc, EqLevel level);

// Exhaustive dominance scan; witness = first dominating allocation.
Verdict check_pareto(const ValueSystem& vs, const Allocation& alloc, int threads = 1);

Verdict check_welfare_opt(const ValueSystem& vs, const Allocation& alloc,
                          WelfareObjective objective, int threads = 1);

// Randomized search for a 3-agent full-externality instance + allocation
// where PROP-E and Average Share disagree.
enum class GapDirection { Either, PropEOnly, AvgShareOnly };
struct GapResult {
  FullInstance instance;
  Allocation alloc;
  bool prop_e_holds = false;
  bool avg_share_holds = false;
  uint64_t trial = 0;
};
std::optional<GapResult> search_fullext_gap(int m, uint64_t seed, uint64_t trials,
                                            GapDirection want = GapDirection::Either);

}  // namespace extfair
