#include "patcount/formulas.hpp"

#include <stdexcept>

#include "patcount/genfunc.hpp"

namespace patcount {

namespace {

bool pattern_is_avoided(ClassId id, int code) {
  const Pattern p = Pattern::from_code(code);
  for (const Pattern& q : class_patterns(id))
    if (q == p) return true;
  return false;
}

void require_pattern_code(int code) {
  switch (code) {
    case 123: case 132: case 213: case 231: case 312: case 321: return;
  }
  throw std::invalid_argument("bad length-3 pattern code");
}

BigInt t1_gf_value(int pattern_code, int n) {
  const RationalGF gf =
      pattern_code == 321 ? gf_t1_321() : gf_t1_312();  // 231 == 312 column
  return gf_coefficients(gf, n)[n];
}

// Occurrence totals for the degenerate classes at the few nonempty lengths.
BigInt degenerate_total(ClassId id, int pattern_code, int n) {
  if (n >= 5) return 0;
  const Pattern q = Pattern::from_code(pattern_code);
  BigInt total = 0;
  for (const Permutation& sigma : generate_class(id, n))
    total += count_occurrences(sigma, q);
  return total;
}

}  // namespace

bool has_closed_form(ClassId id, int pattern_code) {
  require_pattern_code(pattern_code);
  return id != ClassId::D6 && id != ClassId::Degen;
}

BigInt closed_form(ClassId id, int pattern_code, int n) {
  require_pattern_code(pattern_code);
  if (n < 3) return 0;
  if (pattern_is_avoided(id, pattern_code)) return 0;
  const BigInt N = n;
  switch (id) {
    case ClassId::D1:
      switch (pattern_code) {
        case 213: return (N - 3) * pow2(n - 2) + 1;
        case 231:
        case 312: return exact_div((N * N - 5 * N + 8) * pow2(n), 8) - 1;
        case 321:
          // (n^3/3 - 2n^2 + 14n/3 - 5) 2^{n-2} + 1
          return exact_div((N * N * N - 6 * N * N + 14 * N - 15) * pow2(n),
                           12) + 1;
      }
      break;
    case ClassId::D2:
      switch (pattern_code) {
        case 123: return (N - 4) * pow2(n - 1) + N + 2;
        case 231:
        case 312:
          return exact_div((N * N - 7 * N + 16) * pow2(n), 4) - N - 4;
        case 321:
          // (n^3/3 - 3n^2 + 38n/3 - 24) 2^{n-2} + n + 6
          return exact_div((N * N * N - 9 * N * N + 38 * N - 72) * pow2(n),
                           12) + N + 6;
      }
      break;
    case ClassId::D3:
    case ClassId::D4:
      // All four nonzero columns share C(n,3) 2^{n-3}.
      return exact_div(binomial(n, 3) * pow2(n), 8);
    case ClassId::D5:
      switch (pattern_code) {
        case 213:
        case 231:
        case 312: return binomial(n + 2, 5);
        case 123:
          return exact_div(
              N * (7 * N * N * N * N - 40 * N * N * N + 85 * N * N - 80 * N +
                   28),
              120);
      }
      break;
    case ClassId::D6:
    case ClassId::Degen:
      return degenerate_total(id, pattern_code, n);
    case ClassId::T1:
      return t1_gf_value(pattern_code, n);
    case ClassId::T2:
    case ClassId::T4:
      if (pattern_code == 321) return (N - 2) * binomial(n, 3);
      return binomial(n, 3);
    case ClassId::T3:
    case ClassId::T5:
      if (pattern_code == 321)
        return exact_div(N * (N - 2) * (N - 1) * (N - 1), 12);
      return binomial(n + 1, 4);
  }
  throw std::logic_error("closed_form: unhandled key");
}

bool has_composition_sum(ClassId id, int pattern_code) {
  return (id == ClassId::D1 && (pattern_code == 213 || pattern_code == 231)) ||
         (id == ClassId::D2 && (pattern_code == 123 || pattern_code == 231)) ||
         (id == ClassId::D4 && pattern_code == 123);
}

BigInt composition_sum(ClassId id, int pattern_code, int n) {
  if (!has_composition_sum(id, pattern_code))
    throw std::invalid_argument("composition_sum: unsupported key");
  if (n < 3) throw std::invalid_argument("composition_sum: n < 3");
  BigInt total = 0;
  for (const Composition& c : enumerate_compositions(n)) {
    const int k = static_cast<int>(c.size());
    if (id == ClassId::D1 && pattern_code == 213) {
      for (int p : c) total += binomial(p - 1, 2);
    } else if (id == ClassId::D1 && pattern_code == 231) {
      for (int i = 0; i < k - 1; ++i)
        for (int j = i + 1; j < k; ++j)
          total += BigInt(c[j]) * (c[i] - 1);
    } else if (id == ClassId::D2 && pattern_code == 123) {
      for (int p : c) total += binomial(p, 3);
    } else if (id == ClassId::D2 && pattern_code == 231) {
      for (int i = 0; i < k - 1; ++i)
        for (int j = i + 1; j < k; ++j)
          total += BigInt(c[j]) * binomial(c[i], 2);
    } else {  // (D4, 123)
      for (int i = 1; i <= k - 2; ++i)
        total += BigInt(c[i - 1]) * binomial(k - i, 2);
    }
  }
  return total;
}

BigInt pair_sum(int pattern_code, int n) {
  if (pattern_code != 213 && pattern_code != 312)
    throw std::invalid_argument("pair_sum: pattern must be 213 or 312");
  if (n < 3) throw std::invalid_argument("pair_sum: n < 3");
  BigInt total = 0;
  for (int k = 1; k < n; ++k)
    for (int m = k + 1; m <= n; ++m)
      total += pattern_code == 213 ? BigInt(k) * (m - k) * (n - m)
                                   : BigInt(k) * binomial(m - k, 2);
  return total;
}

BigInt power_sum(int p, int n) {
  if (n < 2) throw std::invalid_argument("power_sum: n < 2");
  const BigInt N = n;
  switch (p) {
    case 1: return exact_div(N * (N - 1), 2);
    case 2: return exact_div(N * (N - 1) * (2 * N - 1), 6);
    case 3: return exact_div(N * N * (N - 1) * (N - 1), 4);
    case 4:
      return exact_div(N * (N - 1) * (2 * N - 1) * (3 * N * N - 3 * N - 1),
                       30);
  }
  throw std::invalid_argument("power_sum: p must be 1..4");
}

BigInt power_sum_brute(int p, int n) {
  if (n < 2) throw std::invalid_argument("power_sum_brute: n < 2");
  BigInt total = 0;
  for (int k = 1; k <= n - 1; ++k) {
    BigInt t = 1;
    for (int i = 0; i < p; ++i) t *= k;
    total += t;
  }
  return total;
}

}  // namespace patcount
