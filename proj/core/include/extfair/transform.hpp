#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "extfair/instance.hpp"

namespace extfair {

// Result of the 2-D -> 1-D reduction: w_ik = v_ik - v'_ik plus the per-agent
// constant v'_i(M) connecting the two utility scales:
//   utility_2d(i, A) = utility_1d(i, A) + shift[i]  for every allocation A.
struct TransformResult {
  Instance1D one_d;
  std::vector<Rational> shift;
};

TransformResult transform(const Instance2D& instance);

struct Lemma1Report {
  bool normalized = true;  // w(emptyset) = 0, true by construction
  bool monotone = false;   // all w_ik >= 0 for goods / <= 0 for chores
  bool sign_ok = false;    // bundle values non-negative (goods) / non-positive (chores)
  std::optional<std::pair<int, int>> witness;  // offending (agent, item)
};

// Checks the transformed valuations against the declared kind: normalized,
// (anti-)monotone and uniformly signed.
Lemma1Report verify_lemma1(const TransformResult& result, Kind kind);

// True iff utility_2d == utility_1d + shift on every sampled allocation.
bool check_shift_consistency(const Instance2D& instance, const TransformResult& result,
                             const std::vector<Allocation>& sample_allocs);

}  // namespace extfair
