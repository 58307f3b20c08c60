#include "extfair/enumerate.hpp"

namespace extfair {

uint64_t allocation_count(int n, int m) {
  if (n < 1 || m < 0) throw Error(Errc::BadArgument, "need n >= 1, m >= 0");
  const uint64_t guard = uint64_t(1) << 48;
  uint64_t count = 1;
  for (int k = 0; k < m; ++k) {
    if (count > guard / static_cast<uint64_t>(n))
      throw Error(Errc::TooLarge, "n^m exceeds the 2^48 enumeration guard");
    count *= static_cast<uint64_t>(n);
  }
  return count;
}

Allocation allocation_at(int n, int m, uint64_t index) {
  Allocation a;
  a.assignment.resize(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    a.assignment[static_cast<size_t>(k)] = static_cast<int>(index % static_cast<uint64_t>(n));
    index /= static_cast<uint64_t>(n);
  }
  return a;
}

uint64_t allocation_index(int n, const Allocation& alloc) {
  uint64_t idx = 0;
  for (size_t k = alloc.assignment.size(); k-- > 0;)
    idx = idx * static_cast<uint64_t>(n) + static_cast<uint64_t>(alloc.assignment[k]);
  return idx;
}

}  // namespace extfair
