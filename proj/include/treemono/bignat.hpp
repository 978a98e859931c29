#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace treemono {

// Group orders overflow 64 bits quickly (|Aut(T_4)| = 6^40), so all
// orders are arbitrary-precision naturals, serialized as decimal strings.
using BigNat = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigNat& n) { return n.str(); }

inline BigNat big_pow(unsigned base, unsigned exp) {
  BigNat r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

inline BigNat big_lcm(const BigNat& a, const BigNat& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace treemono
