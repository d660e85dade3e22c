#include "dp4aut/rational.hpp"

#include <cctype>

namespace dp4aut {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) throw ParseError("bad rational: " + text);
    return Rat(BigInt(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw ParseError("bad rational: " + text);
  BigInt d(den);
  if (d == 0) throw ParseError("zero denominator: " + text);
  return Rat(BigInt(num), d);
}

std::string format_rat(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace dp4aut
