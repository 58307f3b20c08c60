#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extfair/errors.hpp"
#include "extfair/rational.hpp"

namespace extfair {

enum class Kind { Goods, Chores, Mixed };
enum class Externality { Positive, Negative, Mixed };
enum class ItemClass : uint8_t { Good, Chore, Neutral };
enum class Space { V, W, Full };

const char* to_string(Kind k);
const char* to_string(Externality e);

// Complete allocation: assignment[k] is the agent receiving item k.
struct Allocation {
  std::vector<int> assignment;

  Allocation() = default;
  explicit Allocation(std::vector<int> a) : assignment(std::move(a)) {}

  int agent_of(int item) const { return assignment[static_cast<size_t>(item)]; }
  int items() const { return static_cast<int>(assignment.size()); }
  uint64_t bundle_mask(int agent) const;
  std::vector<int> bundle(int agent) const;
  bool operator==(const Allocation&) const = default;
};

// n agents x m items, per item a pair (value if received, value if not).
struct Instance2D {
  int n = 0;
  int m = 0;
  std::vector<std::string> item_ids;
  std::vector<Rational> v;       // n*m, row-major
  std::vector<Rational> vprime;  // n*m, row-major

  const Rational& value(int agent, int item) const { return v[idx(agent, item)]; }
  const Rational& extern_value(int agent, int item) const { return vprime[idx(agent, item)]; }
  Rational marginal(int agent, int item) const {  // w_ik = v_ik - v'_ik
    return value(agent, item) - extern_value(agent, item);
  }
  size_t idx(int agent, int item) const {
    return static_cast<size_t>(agent) * static_cast<size_t>(m) + static_cast<size_t>(item);
  }
  void validate() const;
};

struct Instance1D {
  int n = 0;
  int m = 0;
  std::vector<std::string> item_ids;
  std::vector<Rational> w;  // n*m, row-major

  const Rational& value(int agent, int item) const { return w[idx(agent, item)]; }
  size_t idx(int agent, int item) const {
    return static_cast<size_t>(agent) * static_cast<size_t>(m) + static_cast<size_t>(item);
  }
  void validate() const;
};

// Full externalities: value(i, j, k) = what agent i gets when item k goes to
// agent j. Additive over items.
struct FullInstance {
  int n = 0;
  int m = 0;
  std::vector<Rational> v_full;  // n*n*m

  const Rational& value(int receiver, int holder, int item) const {
    return v_full[(static_cast<size_t>(receiver) * n + holder) * m + item];
  }
  Rational& value(int receiver, int holder, int item) {
    return v_full[(static_cast<size_t>(receiver) * n + holder) * m + item];
  }
  void validate() const;
};

struct Classification {
  Kind kind = Kind::Goods;
  Externality externality = Externality::Positive;
  // Correlated = (goods & positive ext) or (chores & negative ext);
  // Inverse = the crossed patterns. Unset when either axis is mixed.
  std::optional<bool> correlated;
  std::vector<ItemClass> per_item;  // n*m, by sign of w_ik
};

Classification classify(const Instance2D& instance);
Kind classify_kind(const Instance1D& instance);

// u_i(A_i) = v_i(A_i) + v'_i(M \ A_i), exact.
Rational utility_2d(const Instance2D& instance, int agent, const Allocation& alloc);
// Sum over all bundles of what they contribute to `agent`.
Rational utility_full(const FullInstance& instance, int agent, const Allocation& alloc);
// w_i(A_i).
Rational utility_1d(const Instance1D& instance, int agent, const Allocation& alloc);

// Uniform bundle evaluation for the V and W spaces. In W mode a bundle is
// worth the sum of its w-values; in V mode the two matrices are kept separate
// so that 2-D utilities are computed from the definition, not via w + shift.
class ValueSystem {
 public:
  static ValueSystem for_2d(const Instance2D& instance, Space space);
  static ValueSystem for_1d(const Instance1D& instance);

  Space space() const { return space_; }
  int agents() const { return n_; }
  int items() const { return m_; }

  // Marginal value of item k for the agent (sign gives the item class).
  Rational marginal(int agent, int item) const;
  ItemClass item_class(int agent, int item) const;

  // Utility of `agent` when holding exactly the bundle `mask`.
  Rational bundle_value(int agent, uint64_t mask) const;
  // Utility of `agent` under the allocation (its own bundle).
  Rational utility(int agent, const Allocation& alloc) const;

  // Used by scanners for incremental updates: contribution of item k to the
  // value of a bundle that contains it vs. one that does not.
  const Rational& in_value(int agent, int item) const { return recv_[idx(agent, item)]; }
  Rational out_value(int agent, int item) const {
    return out_.empty() ? Rational(0) : out_[idx(agent, item)];
  }
  bool has_out() const { return !out_.empty(); }

 private:
  size_t idx(int agent, int item) const {
    return static_cast<size_t>(agent) * static_cast<size_t>(m_) + static_cast<size_t>(item);
  }
  Space space_ = Space::W;
  int n_ = 0;
  int m_ = 0;
  std::vector<Rational> recv_;  // v (V mode) or w (W mode)
  std::vector<Rational> out_;   // v' (V mode); empty in W mode
};

void require_valid_allocation(int n, int m, const Allocation& alloc);

}  // namespace extfair
