#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace opk {

// Exact integer used for all coefficients and matrix entries.
// No floating point appears anywhere in the kernel.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline int sign_pow(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace opk
