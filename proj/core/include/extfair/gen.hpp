#pragma once

#include <cstdint>

#include "extfair/instance.hpp"

namespace extfair {

// Deterministic random 2-D instance. The w_ik signs follow `kind` and the
// v'_ik signs follow the correlation pattern relative to each item's w sign
// (correlated: same orientation as the usual goods-positive / chores-
// negative pairing). Kind::Mixed draws a sign per entry; mixed_externality
// draws the v' sign independently.
struct GenSpec {
  int n = 2;
  int m = 4;
  Kind kind = Kind::Goods;
  bool correlated = true;
  bool mixed_externality = false;
  uint64_t seed = 0;
  int max_den = 10;  // denominators drawn from 1..max_den
};

Instance2D gen_instance(const GenSpec& spec);

}  // namespace extfair
