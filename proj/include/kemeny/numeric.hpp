#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>

namespace kemeny {

// Exact arithmetic types used by the rational mode and the enumeration
// oracle. mpq_class keeps values canonical (reduced, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

template <typename T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(const BigInt& z) { return z.get_d(); }

inline double scalar_abs(double x) { return std::fabs(x); }
inline Rational scalar_abs(const Rational& q) { return abs(q); }

template <typename T>
T scalar_ratio(long long num, long long den) {
  if constexpr (is_exact_v<T>) {
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

// Shortest decimal form that round-trips through strtod.
inline std::string scalar_repr(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  double back = std::strtod(buf, nullptr);
  if (back == x) {
    for (int prec = 1; prec < 17; ++prec) {
      char shorter[64];
      std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
      if (std::strtod(shorter, nullptr) == x) return shorter;
    }
  }
  return buf;
}

inline std::string scalar_repr(const Rational& q) { return q.get_str(); }

}  // namespace kemeny
