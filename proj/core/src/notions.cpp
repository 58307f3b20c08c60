#include "extfair/notions.hpp"

#include <array>
#include <utility>

#include "extfair/transform.hpp"

namespace extfair {

namespace {

constexpr std::array<std::pair<Notion, const char*>, 22> kNotionNames{{
    {Notion::EF, "ef"},
    {Notion::EF1, "ef1"},
    {Notion::EFX, "efx"},
    {Notion::PROP, "prop"},
    {Notion::PROP_E, "prop-e"},
    {Notion::PROP1_E, "prop1-e"},
    {Notion::PROPX_E, "propx-e"},
    {Notion::AVG_SHARE, "avg-share"},
    {Notion::MMS, "mms"},
    {Notion::ALPHA_MMS, "alpha-mms"},
    {Notion::SHIFTED_ALPHA_MMS, "shifted-alpha-mms"},
    {Notion::MMS1, "mms1"},
    {Notion::MMSX, "mmsx"},
    {Notion::ALPHA_MMS_I, "alpha-mms-i"},
    {Notion::ALPHA_MMS_II, "alpha-mms-ii"},
    {Notion::EQ, "eq"},
    {Notion::EQ1, "eq1"},
    {Notion::EQX, "eqx"},
    {Notion::PO, "po"},
    {Notion::MUW, "muw"},
    {Notion::MEW, "mew"},
    {Notion::LEXIMIN_OPT, "leximin-opt"},
}};

}  // namespace

const char* to_string(Notion n) {
  for (const auto& [tag, name] : kNotionNames)
    if (tag == n) return name;
  return "?";
}

std::optional<Notion> parse_notion(std::string_view kebab) {
  for (const auto& [tag, name] : kNotionNames)
    if (kebab == name) return tag;
  return std::nullopt;
}

bool notion_needs_alpha(Notion n) {
  return n == Notion::ALPHA_MMS || n == Notion::SHIFTED_ALPHA_MMS || n == Notion::ALPHA_MMS_I ||
         n == Notion::ALPHA_MMS_II;
}

NotionEvaluator::NotionEvaluator(const Instance2D& instance, Space space, int threads)
    : space_(space), threads_(threads) {
  instance.validate();
  if (space != Space::V && space != Space::W)
    throw Error(Errc::WrongSpace, "a 2-D instance is evaluated in space V or W");
  two_d_ = instance;
  one_d_ = transform(instance).one_d;
  vs_ = ValueSystem::for_2d(*two_d_, space);
}

NotionEvaluator::NotionEvaluator(const Instance1D& instance, int threads)
    : space_(Space::W), threads_(threads) {
  instance.validate();
  one_d_ = instance;
  // Embed as a 2-D instance with zero externalities so the 2-D notions and
  // the MMS profile are available; V and W coincide there.
  Instance2D two_d;
  two_d.n = instance.n;
  two_d.m = instance.m;
  two_d.item_ids = instance.item_ids;
  two_d.v = instance.w;
  two_d.vprime.assign(instance.w.size(), Rational(0));
  two_d_ = std::move(two_d);
  vs_ = ValueSystem::for_1d(*one_d_);
}

NotionEvaluator::NotionEvaluator(const FullInstance& instance, int threads)
    : space_(Space::Full), threads_(threads) {
  instance.validate();
  full_ = instance;
}

const ValueSystem& NotionEvaluator::system() const {
  if (!vs_) throw Error(Errc::WrongSpace, "full-externality instances have no V/W value system");
  return *vs_;
}

const MmsProfile& NotionEvaluator::profile() const {
  if (!profile_) {
    if (!two_d_) throw Error(Errc::Unsupported, "MMS profile needs a 2-D or 1-D instance");
    profile_ = mms_profile(*two_d_, threads_);
  }
  return *profile_;
}

Verdict NotionEvaluator::check(Notion notion, const Allocation& alloc,
                               const std::optional<Rational>& alpha) const {
  if (space_ == Space::Full) {
    switch (notion) {
      case Notion::PROP_E:
        return check_prop_e_full(*full_, alloc);
      case Notion::AVG_SHARE:
        return check_average_share_full(*full_, alloc);
      default:
        throw Error(Errc::Unsupported,
                    "only prop-e and avg-share are defined for full externalities");
    }
  }

  switch (notion) {
    case Notion::EF:
      return check_envy(*vs_, alloc, EnvyLevel::EF);
    case Notion::EF1:
      return check_envy(*vs_, alloc, EnvyLevel::EF1);
    case Notion::EFX:
      return check_envy(*vs_, alloc, EnvyLevel::EFX);
    case Notion::PROP:
      if (space_ != Space::W)
        throw Error(Errc::WrongSpace, "prop is a 1-D notion; evaluate it in space W");
      return check_prop(*one_d_, alloc);
    case Notion::PROP_E:
      return check_prop_e(*vs_, alloc, PropELevel::PROP_E);
    case Notion::PROP1_E:
      return check_prop_e(*vs_, alloc, PropELevel::PROP1_E);
    case Notion::PROPX_E:
      return check_prop_e(*vs_, alloc, PropELevel::PROPX_E);
    case Notion::AVG_SHARE:
      return check_average_share(*two_d_, alloc);
    case Notion::MMS:
      return check_mms_family(*vs_, alloc, MmsVariant::MMS, profile().check_input(space_));
    case Notion::ALPHA_MMS:
      return check_mms_family(*vs_, alloc, MmsVariant::ALPHA_MMS, profile().check_input(space_),
                              alpha);
    case Notion::SHIFTED_ALPHA_MMS:
      return check_mms_family(*vs_, alloc, MmsVariant::SHIFTED_ALPHA_MMS,
                              profile().check_input(space_), alpha);
    case Notion::MMS1:
      return check_mms_family(*vs_, alloc, MmsVariant::MMS1, profile().check_input(space_));
    case Notion::MMSX:
      return check_mms_family(*vs_, alloc, MmsVariant::MMSX, profile().check_input(space_));
    case Notion::ALPHA_MMS_I:
      return check_mms_family(*vs_, alloc, MmsVariant::ALPHA_MMS_I, profile().check_input(space_),
                              alpha);
    case Notion::ALPHA_MMS_II:
      return check_mms_family(*vs_, alloc, MmsVariant::ALPHA_MMS_II, profile().check_input(space_),
                              alpha);
    case Notion::EQ:
      return check_eq(*vs_, alloc, EqLevel::EQ);
    case Notion::EQ1:
      return check_eq(*vs_, alloc, EqLevel::EQ1);
    case Notion::EQX:
      return check_eq(*vs_, alloc, EqLevel::EQX);
    case Notion::PO:
      return check_pareto(*vs_, alloc, threads_);
    case Notion::MUW:
      return check_welfare_opt(*vs_, alloc, WelfareObjective::MUW, threads_);
    case Notion::MEW:
      return check_welfare_opt(*vs_, alloc, WelfareObjective::MEW, threads_);
    case Notion::LEXIMIN_OPT:
      return check_welfare_opt(*vs_, alloc, WelfareObjective::LEXIMIN_OPT, threads_);
  }
  throw Error(Errc::BadArgument, "unknown notion");
}

}  // namespace extfair
