#pragma once

#include <stdexcept>
#include <string>

namespace extfair {

enum class Errc {
  InvalidAllocation,
  TooLarge,
  MixedSigns,
  MissingProfile,
  BadAlpha,
  WrongSpace,
  UnsupportedLevel,
  Unsupported,
  BadEpsilon,
  Parse,
  BadArgument,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

}  // namespace extfair
