#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "extfair/instance.hpp"

namespace extfair {

// Number of complete allocations n^m. Throws Error(Errc::TooLarge) beyond
// the 2^48 enumeration guard.
uint64_t allocation_count(int n, int m);

// index -> allocation in base-n counter order, item 0 least significant.
Allocation allocation_at(int n, int m, uint64_t index);
uint64_t allocation_index(int n, const Allocation& alloc);

// Walks allocations [lo, hi) in counter order while maintaining, for every
// agent, the held-bundle value of each of the n bundles. sums is agent-major
// (sums[a*n + b] = value to agent a of holding bundle b). In V mode these are
// full 2-D utilities; in W mode plain w-sums.
class PartitionScanner {
 public:
  explicit PartitionScanner(const ValueSystem& vs) : vs_(vs) {}

  template <class Visit>  // Visit(uint64_t idx, const std::vector<Rational>& sums,
                          //       const std::vector<uint8_t>& digits)
  void run(uint64_t lo, uint64_t hi, Visit&& visit) const {
    const int n = vs_.agents();
    const int m = vs_.items();
    if (lo >= hi) return;
    std::vector<uint8_t> digits(static_cast<size_t>(m), 0);
    {
      uint64_t t = lo;
      for (int k = 0; k < m; ++k) {
        digits[static_cast<size_t>(k)] = static_cast<uint8_t>(t % n);
        t /= n;
      }
    }
    std::vector<Rational> sums(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        sums[static_cast<size_t>(a) * n + b] = init_bundle(a, b, digits);

    uint64_t idx = lo;
    while (true) {
      visit(idx, sums, digits);
      if (++idx >= hi) break;
      int k = 0;
      while (true) {
        const int old = digits[static_cast<size_t>(k)];
        const int next = old + 1 == n ? 0 : old + 1;
        digits[static_cast<size_t>(k)] = static_cast<uint8_t>(next);
        for (int a = 0; a < n; ++a) move_item(sums, a, k, old, next);
        if (next != 0) break;
        ++k;
      }
    }
  }

  template <class Visit>
  void run_all(Visit&& visit) const {
    run(0, allocation_count(vs_.agents(), vs_.items()), std::forward<Visit>(visit));
  }

 private:
  Rational init_bundle(int agent, int bundle, const std::vector<uint8_t>& digits) const {
    Rational s = 0;
    for (int k = 0; k < vs_.items(); ++k) {
      if (digits[static_cast<size_t>(k)] == bundle) {
        s += vs_.in_value(agent, k);
      } else if (vs_.has_out()) {
        s += vs_.out_value(agent, k);
      }
    }
    return s;
  }

  void move_item(std::vector<Rational>& sums, int agent, int item, int from, int to) const {
    const int n = vs_.agents();
    Rational& sf = sums[static_cast<size_t>(agent) * n + from];
    Rational& st = sums[static_cast<size_t>(agent) * n + to];
    sf -= vs_.in_value(agent, item);
    st += vs_.in_value(agent, item);
    if (vs_.has_out()) {
      sf += vs_.out_value(agent, item);
      st -= vs_.out_value(agent, item);
    }
  }

  const ValueSystem& vs_;
};

// Splits [0, total) into `threads` contiguous ranges and reduces the partial
// results in range order, so results are identical to a sequential scan.
template <class Partial, class Work, class Merge>
Partial parallel_scan(uint64_t total, int threads, Work&& work, Merge&& merge) {
  if (threads < 2 || total < 2) {
    return work(uint64_t(0), total);
  }
  const int t = static_cast<int>(std::min<uint64_t>(threads, total));
  std::vector<Partial> parts(static_cast<size_t>(t));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) {
    const uint64_t lo = total * i / t;
    const uint64_t hi = total * (i + 1) / t;
    pool.emplace_back([&, i, lo, hi] { parts[static_cast<size_t>(i)] = work(lo, hi); });
  }
  for (auto& th : pool) th.join();
  Partial acc = std::move(parts[0]);
  for (int i = 1; i < t; ++i) acc = merge(std::move(acc), std::move(parts[static_cast<size_t>(i)]));
  return acc;
}

}  // namespace extfair
