#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "extfair/checkers.hpp"
#include "extfair/instance.hpp"
#include "extfair/mms.hpp"

namespace extfair {

// Every checkable property, one tag per CLI notion name (lower-kebab).
enum class Notion {
  EF,
  EF1,
  EFX,
  PROP,
  PROP_E,
  PROP1_E,
  PROPX_E,
  AVG_SHARE,
  MMS,
  ALPHA_MMS,
  SHIFTED_ALPHA_MMS,
  MMS1,
  MMSX,
  ALPHA_MMS_I,
  ALPHA_MMS_II,
  EQ,
  EQ1,
  EQX,
  PO,
  MUW,
  MEW,
  LEXIMIN_OPT,
};

const char* to_string(Notion n);
std::optional<Notion> parse_notion(std::string_view kebab);
bool notion_needs_alpha(Notion n);

// Binds an instance and a space and routes notions to their checkers; the
// MMS profile is computed once, on first use.
class NotionEvaluator {
 public:
  NotionEvaluator(const Instance2D& instance, Space space, int threads = 1);
  explicit NotionEvaluator(const Instance1D& instance, int threads = 1);
  explicit NotionEvaluator(const FullInstance& instance, int threads = 1);

  Verdict check(Notion notion, const Allocation& alloc,
                const std::optional<Rational>& alpha = std::nullopt) const;

  const ValueSystem& system() const;
  const MmsProfile& profile() const;  // forces computation
  Space space() const { return space_; }

 private:
  Space space_;
  int threads_;
  std::optional<Instance2D> two_d_;
  std::optional<Instance1D> one_d_;       // transform of two_d_ (W) or the input
  std::optional<FullInstance> full_;
  std::optional<ValueSystem> vs_;
  mutable std::optional<MmsProfile> profile_;
};

}  // namespace extfair
