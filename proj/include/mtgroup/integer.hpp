#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "mtgroup/errors.hpp"

namespace mtg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

/// Least nonnegative residue of a modulo m (m > 0).
inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

/// Parses "3", "-7", "1/2", "-3/4". Whitespace around the token is ignored.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) -> Integer {
    s = trim(s);
    if (s.empty()) throw InvalidInput("empty number in '" + std::string(text) + "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw InvalidInput("bad number '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw InvalidInput("bad number '" + std::string(text) + "'");
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return Integer(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline std::string to_string(const Integer& z) { return z.str(); }

inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Parses a comma-separated list of rationals ("1,0,-1/2").
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    out.push_back(parse_rational(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string join(const std::vector<Rational>& v, std::string_view sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += to_string(v[i]);
  }
  return s;
}

inline std::string join(const std::vector<Integer>& v, std::string_view sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].str();
  }
  return s;
}

}  // namespace mtg
