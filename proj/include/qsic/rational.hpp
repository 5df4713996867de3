#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsic/error.hpp"

namespace qsic {

/// Arbitrary-precision rational in canonical form (lowest terms, positive
/// denominator). GMP keeps `mpq_class` canonical after every arithmetic op.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  require(den != 0, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "num/den", or just "num" when the value is an integer.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "a", "a/b" or a finite decimal such as "2.5".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  require(!s.empty(), "empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start >= t.size()) return false;
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(t.begin());
    return t;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    require(valid_int(num) && valid_int(den), "malformed rational '" + s + "'");
    BigInt d(strip_plus(den));
    require(d != 0, "zero denominator in '" + s + "'");
    Rational r(BigInt(strip_plus(num)), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    require(valid_int(whole) && !frac.empty() && valid_int(frac) && frac[0] != '-' && frac[0] != '+',
            "malformed decimal '" + s + "'");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt w(strip_plus(whole)), f(frac);
    Rational r(negative ? BigInt(w * scale - f) : BigInt(w * scale + f), scale);
    r.canonicalize();
    return r;
  }
  require(valid_int(s), "malformed rational '" + s + "'");
  return Rational(BigInt(strip_plus(s)));
}

inline BigInt lcm_of_denominators(std::span<const Rational> values) {
  BigInt l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

inline std::optional<std::int64_t> to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace qsic
