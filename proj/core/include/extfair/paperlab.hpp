#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extfair/instance.hpp"

namespace extfair {

enum class BuiltinId {
  INTRO_2GOODS,
  EXAMPLE1_LEXIMIN,
  EXAMPLE2_PROPXE,
  PROP_PROOF_GOODS,
  EXAMPLE_CHORES_NEG,
  VG_GOODS,
  VC_CHORES,
  VG_APPENDIX,
  EQ_COUNTEREX,
  MEW_COUNTEREX,
};

const char* to_string(BuiltinId id);
std::optional<BuiltinId> parse_builtin(std::string_view name);  // lower-kebab
std::vector<BuiltinId> all_builtins();

// Builtins with their default parameters.
Instance2D builtin(BuiltinId id);

// The three parameterized Table-1 families; epsilon ranges are validated
// (BadEpsilon outside them).
Instance2D builtin_vg_goods(const Rational& eps1, const Rational& eps2);
Instance2D builtin_vc_chores(const Rational& eps1, const Rational& eps2);  // eps2 < 0
Instance2D builtin_vg_appendix(const Rational& eps1, const Rational& eps2, const Rational& eps3);

enum class ClaimStatus { PASS, FAIL, DISCREPANCY };

const char* to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  std::string expected;  // the source's stated outcome
  std::string computed;  // exhaustive ground truth
  ClaimStatus status = ClaimStatus::PASS;
  std::string evidence;  // witness allocations / exact values
};

std::vector<std::string> claim_ids();

// Runs every claim (or the listed subset, in registry order). An unknown id
// in the filter throws BadArgument. PASS: computed matches the stated
// outcome. DISCREPANCY: ground truth contradicts the source. FAIL: the
// artifact contradicts itself (a witness that does not re-check).
std::vector<ClaimResult> run_suite(const std::optional<std::vector<std::string>>& filter =
                                       std::nullopt,
                                   int threads = 1);

}  // namespace extfair
