#include "conehodge/rational.hpp"

#include <cctype>
#include <limits>

namespace conehodge {

std::string rational_to_string(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s)) throw error("not a rational: '" + s + "'");
    return Rational(BigInt(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    throw error("not a rational: '" + s + "'");
  }
  BigInt d(den);
  if (d == 0) throw error("zero denominator in '" + s + "'");
  return Rational(BigInt(num), d);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::int64_t to_int64(const BigInt& n) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (n < lo || n > hi) throw error("integer out of 64-bit range: " + n.str());
  return static_cast<std::int64_t>(n);
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw error("not an integer: " + rational_to_string(r));
  return to_int64(numerator(r));
}

}  // namespace conehodge
