#include <doctest.h>

#include <random>

#include "extfair/enumerate.hpp"
#include "extfair/gen.hpp"
#include "extfair/mms.hpp"
#include "extfair/transform.hpp"

using namespace extfair;

namespace {

// Reference maximin share by direct enumeration, no incremental sums.
Rational ref_mms(const ValueSystem& vs, int agent) {
  const int n = vs.agents();
  const int m = vs.items();
  const uint64_t total = allocation_count(n, m);
  Rational best;
  bool init = false;
  for (uint64_t idx = 0; idx < total; ++idx) {
    const Allocation a = allocation_at(n, m, idx);
    Rational worst;
    bool winit = false;
    for (int b = 0; b < n; ++b) {
      const Rational val = vs.bundle_value(agent, a.bundle_mask(b));
      if (!winit || val < worst) {
        winit = true;
        worst = val;
      }
    }
    if (!init || worst > best) {
      init = true;
      best = worst;
    }
  }
  return best;
}

std::vector<Instance2D> small_corpus(uint64_t seed, int count, Kind kind) {
  std::mt19937_64 rng(seed);
  std::vector<Instance2D> out;
  for (int t = 0; t < count; ++t) {
    GenSpec spec;
    spec.n = 2 + static_cast<int>(rng() % 2);
    spec.m = 1 + static_cast<int>(rng() % 4);
    spec.kind = kind;
    spec.mixed_externality = kind == Kind::Mixed && (rng() % 2) == 0;
    spec.correlated = (rng() % 2) == 0;
    spec.seed = rng();
    spec.max_den = 4;
    out.push_back(gen_instance(spec));
  }
  return out;
}

}  // namespace

TEST_CASE("maximin shares equal direct enumeration in both spaces") {
  for (Kind kind : {Kind::Goods, Kind::Chores, Kind::Mixed}) {
    for (const Instance2D& inst : small_corpus(64 + static_cast<int>(kind), 12, kind)) {
      const MmsProfile profile = mms_profile(inst);
      const ValueSystem vv = ValueSystem::for_2d(inst, Space::V);
      const ValueSystem vw = ValueSystem::for_2d(inst, Space::W);
      REQUIRE(static_cast<int>(profile.agents.size()) == inst.n);
      for (int i = 0; i < inst.n; ++i) {
        CHECK(profile.agents[i].mu_v == ref_mms(vv, i));
        CHECK(profile.agents[i].mu_w == ref_mms(vw, i));
      }
      CHECK(verify_shift_identity(inst, profile));
    }
  }
}

TEST_CASE("canonical partition is the first optimum and attains mu") {
  for (const Instance2D& inst : small_corpus(123, 10, Kind::Mixed)) {
    const ValueSystem vv = ValueSystem::for_2d(inst, Space::V);
    for (int agent = 0; agent < inst.n; ++agent) {
      const MmsShare share = mms_share(inst, agent, Space::V);
      // the reported min bundle attains mu, no bundle is worse
      Rational worst;
      bool init = false;
      int first_min = 0;
      for (int b = 0; b < inst.n; ++b) {
        const Rational val = vv.bundle_value(agent, share.partition.bundle_mask(b));
        if (!init || val < worst) {
          init = true;
          worst = val;
          first_min = b;
        }
      }
      CHECK(worst == share.mu);
      CHECK(first_min == share.min_bundle);
      // no earlier allocation does as well
      const uint64_t cutoff = allocation_index(inst.n, share.partition);
      for (uint64_t idx = 0; idx < cutoff; ++idx) {
        const Allocation a = allocation_at(inst.n, inst.m, idx);
        Rational w2;
        bool i2 = false;
        for (int b = 0; b < inst.n; ++b) {
          const Rational val = vv.bundle_value(agent, a.bundle_mask(b));
          if (!i2 || val < w2) {
            i2 = true;
            w2 = val;
          }
        }
        CHECK(w2 < share.mu);
      }
    }
  }
}

TEST_CASE("decomposition splits mu by sign against the canonical partition") {
  for (Kind kind : {Kind::Goods, Kind::Chores}) {
    for (const Instance2D& inst : small_corpus(31 + static_cast<int>(kind), 12, kind)) {
      for (int agent = 0; agent < inst.n; ++agent) {
        const MmsShare share = mms_share(inst, agent, Space::V);
        const auto [plus, minus] = mms_decompose(inst, agent, share);
        CHECK(plus + minus == share.mu);
        const uint64_t mask = share.partition.bundle_mask(share.min_bundle);
        Rational in = 0, out = 0;
        for (int k = 0; k < inst.m; ++k) {
          if (mask & (uint64_t(1) << k))
            in += inst.value(agent, k);
          else
            out += inst.extern_value(agent, k);
        }
        if (kind == Kind::Goods) {
          CHECK(plus == in);
          CHECK(minus == out);
        } else {
          CHECK(plus == out);
          CHECK(minus == in);
        }
      }
    }
  }
  // mixed instances do not decompose
  GenSpec spec;
  spec.n = 2;
  spec.m = 3;
  spec.kind = Kind::Mixed;
  spec.seed = 9;
  Instance2D mixed = gen_instance(spec);
  // force both signs to be present
  mixed.v[0] = Rational(5);
  mixed.vprime[0] = Rational(1);
  mixed.v[1] = Rational(-5);
  mixed.vprime[1] = Rational(-1);
  const MmsShare share = mms_share(mixed, 0, Space::V);
  CHECK_THROWS_AS(mms_decompose(mixed, 0, share), Error);
}

TEST_CASE("mms family checkers respect the thresholds") {
  GenSpec spec;
  spec.n = 2;
  spec.m = 4;
  spec.kind = Kind::Goods;
  spec.seed = 3;
  const Instance2D inst = gen_instance(spec);
  const MmsProfile profile = mms_profile(inst);
  const ValueSystem vs = ValueSystem::for_2d(inst, Space::V);
  const MmsCheckInput input = profile.check_input(Space::V);
  const uint64_t total = allocation_count(2, 4);
  for (uint64_t idx = 0; idx < total; ++idx) {
    const Allocation a = allocation_at(2, 4, idx);
    bool plain = true;
    for (int i = 0; i < 2; ++i)
      if (vs.utility(i, a) < input.mu[static_cast<size_t>(i)]) plain = false;
    CHECK(check_mms_family(vs, a, MmsVariant::MMS, input).holds == plain);
    // alpha = 1 coincides with plain MMS when every mu is positive
    CHECK(check_mms_family(vs, a, MmsVariant::ALPHA_MMS, input, Rational(1)).holds == plain);
    // alpha = 0 relaxes goods thresholds to 0
    bool zero = true;
    for (int i = 0; i < 2; ++i)
      if (vs.utility(i, a) < 0) zero = false;
    CHECK(check_mms_family(vs, a, MmsVariant::ALPHA_MMS, input, Rational(0)).holds == zero);
    if (check_mms_family(vs, a, MmsVariant::MMS, input).holds) {
      CHECK(check_mms_family(vs, a, MmsVariant::MMSX, input).holds);
      CHECK(check_mms_family(vs, a, MmsVariant::MMS1, input).holds);
    }
    if (check_mms_family(vs, a, MmsVariant::MMSX, input).holds)
      CHECK(check_mms_family(vs, a, MmsVariant::MMS1, input).holds);
  }
  CHECK_THROWS_AS(check_mms_family(vs, allocation_at(2, 4, 0), MmsVariant::ALPHA_MMS, input,
                                   Rational(3, 2)),
                  Error);
  CHECK_THROWS_AS(check_mms_family(vs, allocation_at(2, 4, 0), MmsVariant::ALPHA_MMS, input),
                  Error);
}

TEST_CASE("best alpha agrees with a per-alpha feasibility probe") {
  // sample alphas around the reported optimum and confirm feasibility flips
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 8; ++trial) {
    GenSpec spec;
    spec.n = 2;
    spec.m = 1 + static_cast<int>(rng() % 3);
    spec.kind = Kind::Chores;
    spec.seed = rng();
    spec.max_den = 3;
    const Instance2D inst = gen_instance(spec);
    const MmsProfile profile = mms_profile(inst);
    const BestAlphaResult res = best_alpha(inst, profile, MmsVariant::ALPHA_MMS);
    const ValueSystem vs = ValueSystem::for_2d(inst, Space::V);
    const MmsCheckInput input = profile.check_input(Space::V);
    auto feasible = [&](const Rational& alpha) {
      const uint64_t total = allocation_count(inst.n, inst.m);
      for (uint64_t idx = 0; idx < total; ++idx)
        if (check_mms_family(vs, allocation_at(inst.n, inst.m, idx), MmsVariant::ALPHA_MMS,
                             input, alpha)
                .holds)
          return true;
      return false;
    };
    if (res.kind == BestAlphaKind::None) {
      CHECK_FALSE(feasible(Rational(1)));
      CHECK_FALSE(feasible(Rational(1, 2)));
    } else if (res.kind == BestAlphaKind::All) {
      CHECK(feasible(Rational(1)));
    } else {
      CHECK(res.alpha >= 0);
      CHECK(res.alpha <= 1);
      if (res.alpha > 0) CHECK(feasible(res.alpha));
      // nothing strictly above the supremum is feasible
      const Rational above = res.alpha + (1 - res.alpha) / 2;
      if (above <= 1 && above > res.alpha) CHECK_FALSE(feasible(above));
      REQUIRE(res.witness.has_value());
      if (res.alpha > 0)
        CHECK(check_mms_family(vs, *res.witness, MmsVariant::ALPHA_MMS, input, res.alpha).holds);
    }
  }
}

TEST_CASE("quadratic variant rejects unsupported sign patterns") {
  GenSpec spec;
  spec.n = 2;
  spec.m = 3;
  spec.kind = Kind::Goods;
  spec.correlated = true;  // positive externalities: mu- > 0
  spec.seed = 8;
  const Instance2D inst = gen_instance(spec);
  const MmsProfile profile = mms_profile(inst);
  REQUIRE(profile.agents[0].mu_minus.has_value());
  if (*profile.agents[0].mu_minus > 0)
    CHECK_THROWS_AS(best_alpha(inst, profile, MmsVariant::ALPHA_MMS_II), Error);
}
