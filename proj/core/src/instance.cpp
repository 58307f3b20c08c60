#include "extfair/instance.hpp"

namespace extfair {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::Goods: return "GOODS";
    case Kind::Chores: return "CHORES";
    case Kind::Mixed: return "MIXED";
  }
  return "?";
}

const char* to_string(Externality e) {
  switch (e) {
    case Externality::Positive: return "POSITIVE";
    case Externality::Negative: return "NEGATIVE";
    case Externality::Mixed: return "MIXED";
  }
  return "?";
}

uint64_t Allocation::bundle_mask(int agent) const {
  uint64_t mask = 0;
  for (size_t k = 0; k < assignment.size(); ++k)
    if (assignment[k] == agent) mask |= uint64_t(1) << k;
  return mask;
}

std::vector<int> Allocation::bundle(int agent) const {
  std::vector<int> items;
  for (size_t k = 0; k < assignment.size(); ++k)
    if (assignment[k] == agent) items.push_back(static_cast<int>(k));
  return items;
}

void Instance2D::validate() const {
  if (n < 1 || m < 0) throw Error(Errc::BadArgument, "instance needs n >= 1, m >= 0");
  const size_t want = static_cast<size_t>(n) * static_cast<size_t>(m);
  if (v.size() != want || vprime.size() != want)
    throw Error(Errc::BadArgument, "valuation matrices must be exactly n x m");
  if (!item_ids.empty() && item_ids.size() != static_cast<size_t>(m))
    throw Error(Errc::BadArgument, "item_ids length must equal m");
}

void Instance1D::validate() const {
  if (n < 1 || m < 0) throw Error(Errc::BadArgument, "instance needs n >= 1, m >= 0");
  if (w.size() != static_cast<size_t>(n) * static_cast<size_t>(m))
    throw Error(Errc::BadArgument, "valuation matrix must be exactly n x m");
}

void FullInstance::validate() const {
  if (n < 1 || m < 0) throw Error(Errc::BadArgument, "instance needs n >= 1, m >= 0");
  if (v_full.size() != static_cast<size_t>(n) * n * m)
    throw Error(Errc::BadArgument, "valuation tensor must be exactly n x n x m");
}

void require_valid_allocation(int n, int m, const Allocation& alloc) {
  if (alloc.items() != m)
    throw Error(Errc::InvalidAllocation, "allocation covers wrong number of items");
  for (int a : alloc.assignment)
    if (a < 0 || a >= n) throw Error(Errc::InvalidAllocation, "agent index out of range");
}

Classification classify(const Instance2D& instance) {
  Classification c;
  bool w_nonneg = true, w_nonpos = true;
  bool e_nonneg = true, e_nonpos = true;
  c.per_item.resize(static_cast<size_t>(instance.n) * instance.m);
  for (int i = 0; i < instance.n; ++i) {
    for (int k = 0; k < instance.m; ++k) {
      const Rational w = instance.marginal(i, k);
      const int s = sgn(w);
      c.per_item[instance.idx(i, k)] =
          s > 0 ? ItemClass::Good : (s < 0 ? ItemClass::Chore : ItemClass::Neutral);
      if (s < 0) w_nonneg = false;
      if (s > 0) w_nonpos = false;
      const int se = sgn(instance.extern_value(i, k));
      if (se < 0) e_nonneg = false;
      if (se > 0) e_nonpos = false;
    }
  }
  c.kind = w_nonneg ? Kind::Goods : (w_nonpos ? Kind::Chores : Kind::Mixed);
  c.externality =
      e_nonneg ? Externality::Positive : (e_nonpos ? Externality::Negative : Externality::Mixed);
  if (c.kind != Kind::Mixed && c.externality != Externality::Mixed) {
    c.correlated = (c.kind == Kind::Goods) == (c.externality == Externality::Positive);
  }
  return c;
}

Kind classify_kind(const Instance1D& instance) {
  bool nonneg = true, nonpos = true;
  for (const Rational& x : instance.w) {
    if (x < 0) nonneg = false;
    if (x > 0) nonpos = false;
  }
  return nonneg ? Kind::Goods : (nonpos ? Kind::Chores : Kind::Mixed);
}

Rational utility_2d(const Instance2D& instance, int agent, const Allocation& alloc) {
  require_valid_allocation(instance.n, instance.m, alloc);
  Rational u = 0;
  for (int k = 0; k < instance.m; ++k)
    u += alloc.agent_of(k) == agent ? instance.value(agent, k) : instance.extern_value(agent, k);
  return u;
}

Rational utility_full(const FullInstance& instance, int agent, const Allocation& alloc) {
  require_valid_allocation(instance.n, instance.m, alloc);
  Rational u = 0;
  for (int k = 0; k < instance.m; ++k) u += instance.value(agent, alloc.agent_of(k), k);
  return u;
}

Rational utility_1d(const Instance1D& instance, int agent, const Allocation& alloc) {
  require_valid_allocation(instance.n, instance.m, alloc);
  Rational u = 0;
  for (int k = 0; k < instance.m; ++k)
    if (alloc.agent_of(k) == agent) u += instance.value(agent, k);
  return u;
}

ValueSystem ValueSystem::for_2d(const Instance2D& instance, Space space) {
  instance.validate();
  ValueSystem vs;
  vs.n_ = instance.n;
  vs.m_ = instance.m;
  vs.space_ = space;
  if (space == Space::V) {
    vs.recv_ = instance.v;
    vs.out_ = instance.vprime;
  } else if (space == Space::W) {
    vs.recv_.reserve(instance.v.size());
    for (size_t i = 0; i < instance.v.size(); ++i)
      vs.recv_.push_back(instance.v[i] - instance.vprime[i]);
  } else {
    throw Error(Errc::WrongSpace, "ValueSystem supports spaces V and W");
  }
  return vs;
}

ValueSystem ValueSystem::for_1d(const Instance1D& instance) {
  instance.validate();
  ValueSystem vs;
  vs.n_ = instance.n;
  vs.m_ = instance.m;
  vs.space_ = Space::W;
  vs.recv_ = instance.w;
  return vs;
}

Rational ValueSystem::marginal(int agent, int item) const {
  if (out_.empty()) return recv_[idx(agent, item)];
  return recv_[idx(agent, item)] - out_[idx(agent, item)];
}

ItemClass ValueSystem::item_class(int agent, int item) const {
  const int s = sgn(marginal(agent, item));
  return s > 0 ? ItemClass::Good : (s < 0 ? ItemClass::Chore : ItemClass::Neutral);
}

Rational ValueSystem::bundle_value(int agent, uint64_t mask) const {
  Rational u = 0;
  for (int k = 0; k < m_; ++k) {
    if (mask >> k & 1) {
      u += recv_[idx(agent, k)];
    } else if (!out_.empty()) {
      u += out_[idx(agent, k)];
    }
  }
  return u;
}

Rational ValueSystem::utility(int agent, const Allocation& alloc) const {
  require_valid_allocation(n_, m_, alloc);
  return bundle_value(agent, alloc.bundle_mask(agent));
}

}  // namespace extfair
