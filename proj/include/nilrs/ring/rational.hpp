#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace nilrs {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Decimal points and exponents are rejected so
/// that floats never leak into exact computations.
inline std::optional<Rational> parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) return std::nullopt;
  std::size_t slash = s.find('/');
  auto is_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  std::string_view sv(s);
  if (slash == std::string::npos) {
    if (!is_int(sv, true)) return std::nullopt;
  } else if (!is_int(sv.substr(0, slash), true) || !is_int(sv.substr(slash + 1), false)) {
    return std::nullopt;
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace nilrs
