#include "extfair/rational.hpp"

#include <cctype>

#include "extfair/errors.hpp"

namespace extfair {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&] { throw Error(Errc::Parse, "malformed rational: '" + s + "'"); };

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) fail();

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    BigInt d{std::string(den)};
    if (d == 0) fail();
    value = Rational(BigInt{std::string(num)}, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) fail();
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
    BigInt f = frac.empty() ? BigInt(0) : BigInt{std::string(frac)};
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(body)) fail();
    value = Rational(BigInt{std::string(body)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace extfair
