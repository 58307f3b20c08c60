#pragma once

#include <optional>
#include <vector>

#include "extfair/instance.hpp"
#include "extfair/notions.hpp"

namespace extfair {

// Agents pick their highest-w remaining item (least harmful for chores) in
// the given cyclic order until items run out. Uniform-sign instances only.
Allocation round_robin(const Instance1D& instance, const std::vector<int>& order);

// Two-phase scheme for mixed w signs: universal chores first (padded with
// zero dummies to a multiple of n), then the rest snake-wise with agents
// passing on non-positive items.
Allocation double_round_robin(const Instance1D& instance);

// Envy-cycle elimination for goods: each item goes to an unenvied agent,
// rotating bundles along an envy cycle when nobody qualifies.
Allocation envy_cycle(const Instance1D& instance);

// Classic bag filling against exact mu_W/2 thresholds; all-goods only.
Allocation bag_fill_half_mms(const Instance1D& instance, const std::vector<Rational>& mu_w);

enum class OptObjective { MUW, MEW, LEXIMIN, MNW_ON_W };

// Exhaustive optimum over all n^m allocations, ties broken by enumeration
// order. MNW_ON_W requires a W-space all-goods system.
Allocation exhaustive_opt(const ValueSystem& vs, OptObjective objective, int threads = 1);

struct NotionRequest {
  Notion notion;
  std::optional<Rational> alpha;
};

// First allocation (enumeration order) satisfying every notion, or nullopt —
// an exhaustive non-existence certificate at this instance size.
std::optional<Allocation> search_predicate(const NotionEvaluator& eval,
                                           const std::vector<NotionRequest>& notions);

}  // namespace extfair
