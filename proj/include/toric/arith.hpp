#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace toric {

/// Arbitrary-precision integer and rational scalars. All computations in the
/// library are exact; doubles never appear.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Binomial coefficient C(n, k) for n >= 0. Returns 0 when k < 0 or k > n.
inline Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

/// x^e for integer e of either sign; x must be nonzero when e < 0.
inline Rat pow_rat(const Rat& x, const Int& e) {
  if (e < 0 && x == 0) throw std::domain_error("pow_rat: zero base with negative exponent");
  Rat base = e < 0 ? Rat(1) / x : x;
  Int n = boost::multiprecision::abs(e);
  Rat r = 1;
  while (n > 0) {
    if ((n & 1) != 0) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

/// "p/q" or "p"; denominator always positive.
inline std::string to_string(const Rat& v) {
  const Int num = boost::multiprecision::numerator(v);
  const Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::optional<Rat> parse_rat(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rat(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace toric
