#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patcount/bigint.hpp"

namespace patcount {

// Dense integer polynomial; coefficient index = exponent. Normalized so the
// last stored coefficient is nonzero (the zero polynomial is empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<BigInt> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  // Parses a comma separated coefficient list, constant term first:
  // "0,0,0,1,2" is x^3 (1 + 2x).
  static IntPolynomial parse(const std::string& text);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int e) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  // Multiply by q^e (shift exponents up by e).
  IntPolynomial shifted(int e) const;

  BigInt eval(const BigInt& x) const;
  // d/dq evaluated at q = 1: sum of e * coeff(e).
  BigInt derivative_at_one() const;

  std::string to_string(const std::string& var = "x") const;
  bool operator==(const IntPolynomial&) const = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// numerator / denominator with denominator constant term +-1, which keeps
// every Maclaurin coefficient an integer.
struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

// First N+1 Maclaurin coefficients, computed by the linear recurrence the
// denominator induces (after normalizing its constant term to 1).
std::vector<BigInt> gf_coefficients(const RationalGF& gf, int n_terms);

BigInt fibonacci(int n);  // F_0 = 0, F_1 = 1

// 0/1 word with no two consecutive ones.
using FibWord = std::vector<uint8_t>;

std::string fib_word_string(const FibWord& w);
FibWord parse_fib_word(const std::string& bits);  // rejects consecutive ones
bool is_fib_word(const FibWord& w);

// All Fibonacci binary words of length m, lexicographic; |B_m| = F_{m+2}.
std::vector<FibWord> fib_words(int m);

// Ascent positions are 1-based: asc(w) = { i in [1, m) : w_i < w_{i+1} }.
std::vector<int> ascents(const FibWord& w);
long long maj(const FibWord& w);

// M_m(q) = sum over B_m of q^maj(w), two independent routes.
IntPolynomial maj_polynomial_direct(int m);
IntPolynomial maj_polynomial(int m);  // M_m = M_{m-1} + q^{m-1} M_{m-2}

// f_312 on S_n(123,132,213) as the maj sum over B_{n-1}.
BigInt f312_via_maj(int n);

// The named generating functions.
RationalGF gf_fib();           // x / (1 - x - x^2)
RationalGF gf_t1_312();        // x^3 (1+2x)   / (1-x-x^2)^3
RationalGF gf_t1_321();        // x^3 (1+6x+12x^2+8x^3) / (1-x-x^2)^4
RationalGF gf_fib_shift3();    // x^3 (3+2x)   / (1-x-x^2)    = sum F_{n+1} x^n
RationalGF gf_binom3_fib();    // x^3 (3+8x+6x^2+4x^3) / (1-x-x^2)^4
                               //   = sum C(n,3) F_{n+1} x^n

}  // namespace patcount
