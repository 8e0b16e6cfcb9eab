#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace patcount {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k) as an exact integer; 0 when k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// 2^e for e >= 0; exact.
inline BigInt pow2(long long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return BigInt(1) << static_cast<unsigned>(e);
}

// Exact division: throws if b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b != a) throw std::logic_error("exact_div: remainder is nonzero");
  return q;
}

}  // namespace patcount
