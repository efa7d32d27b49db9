#pragma once

// Exact integer / rational arithmetic used by the counting and angle layers.
// Counts can exceed 64 bits quickly, and angle feasibility is decided by
// exact fractional-part comparisons, so everything here is arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sphgon {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // divides exactly: result is binomial(n-k+i, i)
  }
  return result;
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline BigInt floor_int(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

inline long floor_long(const Rational& x) { return floor_int(x).convert_to<long>(); }

inline Rational frac_part(const Rational& x) { return x - Rational(floor_int(x)); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::string to_string(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

// Accepts "3/2", "1.5", "-0.25", "2".  Decimal fractions convert exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) fail();

  bool negative = false;
  size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }

  auto digits = [&](std::string_view part) {
    if (part.empty()) fail();
    for (char ch : part)
      if (ch < '0' || ch > '9') fail();
    return BigInt(std::string(part));
  };

  std::string_view body = text.substr(pos);
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    BigInt num = digits(body.substr(0, slash));
    BigInt den = digits(body.substr(slash + 1));
    if (den == 0) fail();
    value = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac  = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    BigInt num = whole.empty() ? BigInt(0) : digits(whole);
    BigInt den = 1;
    if (!frac.empty()) {
      for (size_t i = 0; i < frac.size(); ++i) den *= 10;
      num = num * den + digits(frac);
    }
    value = Rational(num, den);
  } else {
    value = Rational(digits(body));
  }
  return negative ? -value : value;
}

}  // namespace sphgon
