#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace latfill {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Thrown when a computational guard (rank limit) trips; CLI maps this to exit 1.
struct RankGuardError : std::runtime_error {
  explicit RankGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Reserved entry points that are intentionally not implemented.
struct NotImplementedError : std::runtime_error {
  explicit NotImplementedError(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// g = gcd(a,b) >= 0 together with s,t such that s*a + t*b = g.
struct Xgcd {
  Int g, s, t;
};

inline Xgcd xgcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

// Floor of a/b for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Representative of a mod m in [0, m) for m > 0.
inline Int pos_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int isqrt_floor(const Int& a) { return boost::multiprecision::sqrt(a); }

inline bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline IntVec negated(const IntVec& v) {
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
  return w;
}

inline bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace latfill
