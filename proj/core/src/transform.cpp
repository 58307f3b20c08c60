#include "extfair/transform.hpp"

namespace extfair {

TransformResult transform(const Instance2D& instance) {
  instance.validate();
  TransformResult r;
  r.one_d.n = instance.n;
  r.one_d.m = instance.m;
  r.one_d.item_ids = instance.item_ids;
  r.one_d.w.reserve(instance.v.size());
  r.shift.assign(static_cast<size_t>(instance.n), Rational(0));
  for (int i = 0; i < instance.n; ++i) {
    for (int k = 0; k < instance.m; ++k) {
      r.one_d.w.push_back(instance.value(i, k) - instance.extern_value(i, k));
      r.shift[static_cast<size_t>(i)] += instance.extern_value(i, k);
    }
  }
  return r;
}

Lemma1Report verify_lemma1(const TransformResult& result, Kind kind) {
  if (kind == Kind::Mixed)
    throw Error(Errc::BadArgument, "lemma 1 applies to goods or chores instances");
  Lemma1Report rep;
  rep.monotone = true;
  const Instance1D& w = result.one_d;
  for (int i = 0; i < w.n && rep.monotone; ++i) {
    for (int k = 0; k < w.m; ++k) {
      const int s = sgn(w.value(i, k));
      if ((kind == Kind::Goods && s < 0) || (kind == Kind::Chores && s > 0)) {
        rep.monotone = false;
        rep.witness = {i, k};
        break;
      }
    }
  }
  // With additive w, every bundle value is a sum of same-signed item values,
  // so the bundle-sign condition coincides with per-item monotonicity.
  rep.sign_ok = rep.monotone;
  return rep;
}

bool check_shift_consistency(const Instance2D& instance, const TransformResult& result,
                             const std::vector<Allocation>& sample_allocs) {
  for (const Allocation& alloc : sample_allocs) {
    for (int i = 0; i < instance.n; ++i) {
      if (utility_2d(instance, i, alloc) !=
          utility_1d(result.one_d, i, alloc) + result.shift[static_cast<size_t>(i)])
        return false;
    }
  }
  return true;
}

}  // namespace extfair
