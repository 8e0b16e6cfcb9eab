#include "patcount/genfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace patcount {

IntPolynomial::IntPolynomial(std::initializer_list<BigInt> coeffs)
    : coeffs_(coeffs) {
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos)
      throw std::invalid_argument("IntPolynomial::parse: empty coefficient");
    size_t b = tok.find_last_not_of(" \t");
    coeffs.emplace_back(tok.substr(a, b - a + 1));
  }
  if (coeffs.empty())
    throw std::invalid_argument("IntPolynomial::parse: no coefficients");
  return IntPolynomial(std::move(coeffs));
}

BigInt IntPolynomial::coeff(int e) const {
  if (e < 0 || e >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[e];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int e) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + e);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + e] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

BigInt IntPolynomial::derivative_at_one() const {
  BigInt r = 0;
  for (size_t e = 1; e < coeffs_.size(); ++e) r += BigInt(e) * coeffs_[e];
  return r;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    if (!s.empty()) s += coeffs_[e] > 0 ? " + " : " - ";
    else if (coeffs_[e] < 0) s += "-";
    const BigInt mag = abs(coeffs_[e]);
    if (mag != 1 || e == 0) s += mag.str();
    if (e >= 1) {
      s += var;
      if (e >= 2) s += "^" + std::to_string(e);
    }
  }
  return s;
}

std::vector<BigInt> gf_coefficients(const RationalGF& gf, int n_terms) {
  const BigInt d0 = gf.denominator.coeff(0);
  if (d0 != 1 && d0 != -1)
    throw std::invalid_argument(
        "gf_coefficients: denominator constant term must be +-1");
  std::vector<BigInt> out(n_terms + 1);
  const int dd = gf.denominator.degree();
  for (int n = 0; n <= n_terms; ++n) {
    BigInt acc = gf.numerator.coeff(n);
    for (int j = 1; j <= std::min(n, dd); ++j)
      acc -= gf.denominator.coeff(j) * out[n - j];
    out[n] = d0 == 1 ? acc : -acc;
  }
  return out;
}

BigInt fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci: n < 0");
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt t = a + b;
    a = b;
    b = t;
  }
  return a;
}

std::string fib_word_string(const FibWord& w) {
  std::string s;
  for (uint8_t b : w) s += b ? '1' : '0';
  return s;
}

bool is_fib_word(const FibWord& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 1 && w[i + 1] == 1) return false;
  for (uint8_t b : w)
    if (b > 1) return false;
  return true;
}

FibWord parse_fib_word(const std::string& bits) {
  FibWord w;
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("parse_fib_word: bad character");
    w.push_back(ch - '0');
  }
  if (!is_fib_word(w))
    throw std::invalid_argument("parse_fib_word: consecutive ones");
  return w;
}

std::vector<FibWord> fib_words(int m) {
  if (m < 0) throw std::invalid_argument("fib_words: m < 0");
  std::vector<FibWord> out;
  FibWord cur(m);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    cur[i] = 0;
    self(self, i + 1);
    if (i == 0 || cur[i - 1] == 0) {
      cur[i] = 1;
      self(self, i + 1);
      cur[i] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> ascents(const FibWord& w) {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

long long maj(const FibWord& w) {
  long long s = 0;
  for (int i : ascents(w)) s += i;
  return s;
}

IntPolynomial maj_polynomial_direct(int m) {
  if (m < 0) throw std::invalid_argument("maj_polynomial_direct: m < 0");
  // maj over B_m is at most m(m-1)/2.
  std::vector<BigInt> coeffs(m * (m - 1) / 2 + 1);
  for (const FibWord& w : fib_words(m)) coeffs[maj(w)] += 1;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial maj_polynomial(int m) {
  if (m < 2) throw std::invalid_argument("maj_polynomial: m < 2");
  IntPolynomial m2{2, 1};        // M_2 = 2 + q
  IntPolynomial m3{2, 1, 2};     // M_3 = 2 + q + 2q^2
  if (m == 2) return m2;
  IntPolynomial prev = m2, cur = m3;
  for (int k = 4; k <= m; ++k) {
    IntPolynomial next = cur + prev.shifted(k - 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt f312_via_maj(int n) {
  if (n < 3) throw std::invalid_argument("f312_via_maj: n < 3");
  BigInt total = 0;
  for (const FibWord& w : fib_words(n - 1)) total += maj(w);
  return total;
}

RationalGF gf_fib() {
  return {IntPolynomial{0, 1}, IntPolynomial{1, -1, -1}};
}

namespace {
IntPolynomial fib_den_power(int k) {
  IntPolynomial den{1};
  IntPolynomial base{1, -1, -1};
  for (int i = 0; i < k; ++i) den = den * base;
  return den;
}
}  // namespace

RationalGF gf_t1_312() {
  return {IntPolynomial{0, 0, 0, 1, 2}, fib_den_power(3)};
}

RationalGF gf_t1_321() {
  return {IntPolynomial{0, 0, 0, 1, 6, 12, 8}, fib_den_power(4)};
}

RationalGF gf_fib_shift3() {
  return {IntPolynomial{0, 0, 0, 3, 2}, fib_den_power(1)};
}

RationalGF gf_binom3_fib() {
  return {IntPolynomial{0, 0, 0, 3, 8, 6, 4}, fib_den_power(4)};
}

}  // namespace patcount
