#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "hopfforge/error.hpp"

namespace hopfforge {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) {
  // mpq_class::get_str already omits "/1".
  return q.get_str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace detail

// Parses "p/q" or "p". Throws ParseError on anything else, including q == 0.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (num.size() > 1 && num[0] == '+') num.erase(0, 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den) ||
      den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational \"" + s + "\"");
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw ParseError("zero denominator in rational \"" + s + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace hopfforge
