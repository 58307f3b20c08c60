#pragma once

#include <optional>
#include <vector>

#include "extfair/checkers.hpp"
#include "extfair/instance.hpp"

namespace extfair {

// One agent's maximin share data. The canonical partition is the first
// optimum in enumeration order (base-n counter, item 0 least significant);
// min_bundle is the lowest-index bundle attaining the minimum within it.
struct MmsShare {
  Rational mu;
  Allocation partition;
  int min_bundle = 0;
};

struct MmsAgentProfile {
  Rational mu_v;
  Rational mu_w;
  Rational shift;  // v'_i(M)
  Allocation canonical_partition;  // optimum in V
  int min_bundle = 0;
  std::optional<Rational> mu_plus;   // unset on MIXED instances
  std::optional<Rational> mu_minus;
};

struct MmsProfile {
  std::vector<MmsAgentProfile> agents;

  MmsCheckInput check_input(Space space) const;
};

MmsShare mms_share(const Instance2D& instance, int agent, Space space, int threads = 1);
MmsShare mms_share_1d(const Instance1D& instance, int agent, int threads = 1);

// Full profile: mu_V and mu_W come from two independent enumerations; the
// mu+/mu- decomposition is filled in for pure goods/chores instances.
MmsProfile mms_profile(const Instance2D& instance, int threads = 1);

// Decomposition against the canonical min bundle B*:
//   goods:  mu+ = v_i(B*), mu- = v'_i(M \ B*)
//   chores: mu+ = v'_i(M \ B*), mu- = v_i(B*)
// Either way mu+ + mu- = mu_V. Throws Unsupported for MIXED instances.
std::pair<Rational, Rational> mms_decompose(const Instance2D& instance, int agent,
                                            const MmsShare& v_share);

// mu_V = mu_W + v'_i(M) for every agent (Eq. 3-style identity).
bool verify_shift_identity(const Instance2D& instance, const MmsProfile& profile);

// Largest alpha supported by some allocation for the given variant, over the
// V-space utilities. None: no alpha in the variant's range works for any
// allocation. All: alpha = 1 (exact) is attainable.
enum class BestAlphaKind { None, All, Value };

struct BestAlphaResult {
  BestAlphaKind kind = BestAlphaKind::None;
  Rational alpha;  // meaningful for Value (and 1 for All)
  std::optional<Allocation> witness;
  bool zero_mu = false;      // some agent has mu = 0; its constraint is u >= 0
  bool approximate = false;  // alpha is a feasible lower bound, not the exact
                             // supremum (quadratic variant only)
};

BestAlphaResult best_alpha(const Instance2D& instance, const MmsProfile& profile,
                           MmsVariant variant, int threads = 1);

}  // namespace extfair
