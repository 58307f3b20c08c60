#include "extfair/gen.hpp"

#include <random>

namespace extfair {

Instance2D gen_instance(const GenSpec& spec) {
  if (spec.n < 1 || spec.m < 0 || spec.m > 48 || spec.max_den < 1)
    throw Error(Errc::BadArgument, "generator needs n >= 1, 0 <= m <= 48, max_den >= 1");
  std::mt19937_64 rng(spec.seed);
  // rng() % k keeps the output independent of the standard library's
  // distribution implementations.
  auto draw = [&](uint64_t k) { return static_cast<long>(rng() % k); };

  Instance2D out;
  out.n = spec.n;
  out.m = spec.m;
  for (int k = 0; k < spec.m; ++k) out.item_ids.push_back("g" + std::to_string(k + 1));
  out.v.resize(static_cast<size_t>(spec.n) * spec.m);
  out.vprime.resize(static_cast<size_t>(spec.n) * spec.m);

  for (int i = 0; i < spec.n; ++i) {
    for (int k = 0; k < spec.m; ++k) {
      int w_sign;
      switch (spec.kind) {
        case Kind::Goods:
          w_sign = 1;
          break;
        case Kind::Chores:
          w_sign = -1;
          break;
        case Kind::Mixed:
          w_sign = draw(2) == 0 ? 1 : -1;
          break;
      }
      const Rational w = Rational(w_sign * (1 + draw(20)), 1 + draw(spec.max_den));
      int e_sign = spec.correlated ? w_sign : -w_sign;
      if (spec.mixed_externality) e_sign = draw(2) == 0 ? 1 : -1;
      const Rational vp = Rational(e_sign * (1 + draw(20)), 1 + draw(spec.max_den));
      out.vprime[out.idx(i, k)] = vp;
      out.v[out.idx(i, k)] = w + vp;
    }
  }
  return out;
}

}  // namespace extfair
