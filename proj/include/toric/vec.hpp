#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

/// A lattice vector, in N or in the dual lattice M depending on context.
using Vec = std::vector<Int>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

inline bool is_zero(const Vec& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

/// Natural pairing <p, u> = sum p_i u_i.
inline Int pairing(const Vec& p, const Vec& u) {
  if (p.size() != u.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * u[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec scale(const Int& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

inline Vec negate(const Vec& a) { return scale(Int(-1), a); }

inline Int content(const Vec& v) {
  Int g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return g;
}

/// Divide by the gcd of the coordinates. Direction is preserved; cone rays
/// must never be sign-flipped.
inline Vec primitive(const Vec& v) {
  const Int g = content(v);
  if (g == 0 || g == 1) return v;
  Vec r = v;
  for (auto& c : r) c /= g;
  return r;
}

/// Primitive with the first nonzero coordinate positive. For free lattice
/// vectors (kernel bases and the like), not for rays.
inline Vec primitive_signed(const Vec& v) {
  Vec r = primitive(v);
  for (const auto& c : r) {
    if (c > 0) return r;
    if (c < 0) return negate(r);
  }
  return r;
}

inline bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace toric
