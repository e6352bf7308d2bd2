#pragma once

// Exact weights. All limit comparisons in the edge-uncertainty model are
// exact rational comparisons; ties (L_e == L_f) must not be corrupted by
// rounding, so weights are never stored as floating point there.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "umst/errors.hpp"

namespace umst {

using Weight = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "12", "-4.5", "0.125" or "p/q" into an exact rational.
inline Weight parse_weight(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw Error(ErrorCode::BadInput, "empty weight string");

  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  std::string int_part, frac_part, den_part;
  std::string* cur = &int_part;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur->push_back(c);
    } else if (c == '.' && cur == &int_part && den_part.empty()) {
      cur = &frac_part;
    } else if (c == '/' && cur == &int_part && frac_part.empty()) {
      cur = &den_part;
    } else {
      throw Error(ErrorCode::BadInput, "cannot parse weight '" + text + "'");
    }
  }
  if (cur == &den_part) {
    if (int_part.empty() || den_part.empty())
      throw Error(ErrorCode::BadInput, "cannot parse weight '" + text + "'");
    BigInt num(int_part), den(den_part);
    if (den == 0) throw Error(ErrorCode::BadInput, "zero denominator in '" + text + "'");
    Weight w(num, den);
    return neg ? Weight(-w) : w;
  }
  if (int_part.empty() && frac_part.empty())
    throw Error(ErrorCode::BadInput, "cannot parse weight '" + text + "'");
  BigInt num = int_part.empty() ? BigInt(0) : BigInt(int_part);
  BigInt den = 1;
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Weight w(num, den);
  return neg ? Weight(-w) : w;
}

// Renders exactly: finite decimal when the denominator is of the form
// 2^a * 5^b, otherwise "p/q".
inline std::string format_weight(const Weight& w) {
  BigInt num = numerator(w);
  BigInt den = denominator(w);
  bool neg = num < 0;
  if (neg) num = -num;

  BigInt d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) {
    std::string s = num.str() + "/" + den.str();
    return neg ? "-" + s : s;
  }
  int shift = std::max(twos, fives);
  BigInt scaled = num;
  for (int i = 0; i < shift - twos; ++i) scaled *= 2;
  for (int i = 0; i < shift - fives; ++i) scaled *= 5;
  std::string digits = scaled.str();
  std::string out;
  if (shift == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= shift)
      digits.insert(digits.begin(), shift + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - shift) + "." + digits.substr(digits.size() - shift);
    // drop trailing zeros of the fraction
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

inline Weight weight_from_double(double x) { return Weight(x); }  // exact

inline double weight_to_double(const Weight& w) { return w.convert_to<double>(); }

// Comparison context. tau == 0 gives exact semantics (the edge model);
// a positive tau treats values within tau as equal (projected vertex
// instances, where limits come from floating-point geometry).
struct WeightOrder {
  Weight tau{0};

  bool eq(const Weight& a, const Weight& b) const {
    if (tau == 0) return a == b;
    Weight d = a - b;
    if (d < 0) d = -d;
    return d <= tau;
  }
  bool lt(const Weight& a, const Weight& b) const { return !eq(a, b) && a < b; }
  bool gt(const Weight& a, const Weight& b) const { return !eq(a, b) && a > b; }
  bool le(const Weight& a, const Weight& b) const { return !gt(a, b); }
  bool ge(const Weight& a, const Weight& b) const { return !lt(a, b); }
};

}  // namespace umst
