#include "patcount/classes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace patcount {

namespace {

std::vector<Pattern> patterns_from_codes(std::initializer_list<int> codes) {
  std::vector<Pattern> out;
  for (int c : codes) out.push_back(Pattern::from_code(c));
  return out;
}

std::vector<Pattern> sorted(std::vector<Pattern> ps) {
  std::sort(ps.begin(), ps.end());
  return ps;
}

// All symmetry words of length <= 3 ordered by (length, lex with c < r < i).
// The symmetry group has order 8, so this covers every element with its
// lexicographically smallest representative first.
const std::vector<SymmetryWord>& all_words() {
  static const std::vector<SymmetryWord> words = [] {
    std::vector<SymmetryWord> out;
    const SymmetryOp ops[] = {SymmetryOp::complement, SymmetryOp::reverse,
                              SymmetryOp::inverse};
    out.push_back({});
    for (auto a : ops) out.push_back({a});
    for (auto a : ops)
      for (auto b : ops) out.push_back({a, b});
    for (auto a : ops)
      for (auto b : ops)
        for (auto c : ops) out.push_back({a, b, c});
    return out;
  }();
  return words;
}

std::vector<Pattern> push_patterns(const std::vector<Pattern>& ps,
                                   const SymmetryWord& w) {
  std::vector<Pattern> out;
  for (const Pattern& p : ps) out.push_back(apply_symmetry(p, w));
  return sorted(std::move(out));
}

// Brute-force filter used only for the degenerate classes (n <= 4).
std::vector<Permutation> tiny_filter(const std::vector<Pattern>& R, int n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  do {
    Permutation sigma(v);
    if (avoids(sigma, R)) out.push_back(std::move(sigma));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation structure_t2(int n, int k) {
  std::vector<int> v;
  for (int x = n; x > k; --x) v.push_back(x);
  for (int x = k - 1; x >= 1; --x) v.push_back(x);
  v.push_back(k);
  return Permutation(std::move(v));
}

Permutation structure_t3(int n, int k) {
  std::vector<int> v;
  for (int x = n; x > k; --x) v.push_back(x);
  for (int x = 1; x <= k; ++x) v.push_back(x);
  return Permutation(std::move(v));
}

Permutation structure_t4(int n, int k) {
  std::vector<int> v;
  for (int x = n - 1; x > k; --x) v.push_back(x);
  v.push_back(n);
  for (int x = k; x >= 1; --x) v.push_back(x);
  return Permutation(std::move(v));
}

Permutation structure_t5(int n, int k) {
  std::vector<int> v;
  for (int x = k - 1; x >= 1; --x) v.push_back(x);
  for (int x = n; x >= k; --x) v.push_back(x);
  return Permutation(std::move(v));
}

std::vector<int> right_to_left_maxima_positions(const Permutation& sigma) {
  std::vector<int> pos;
  int best = 0;
  for (int i = sigma.size(); i >= 1; --i) {
    if (sigma.at(i) > best) {
      best = sigma.at(i);
      pos.push_back(i);
    }
  }
  std::reverse(pos.begin(), pos.end());
  return pos;
}

std::vector<int> left_to_right_maxima_positions(const Permutation& sigma) {
  std::vector<int> pos;
  int best = 0;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sigma.at(i) > best) {
      best = sigma.at(i);
      pos.push_back(i);
    }
  }
  return pos;
}

}  // namespace

std::string class_name(ClassId id) {
  switch (id) {
    case ClassId::D1: return "D1";
    case ClassId::D2: return "D2";
    case ClassId::D3: return "D3";
    case ClassId::D4: return "D4";
    case ClassId::D5: return "D5";
    case ClassId::D6: return "D6";
    case ClassId::T1: return "T1";
    case ClassId::T2: return "T2";
    case ClassId::T3: return "T3";
    case ClassId::T4: return "T4";
    case ClassId::T5: return "T5";
    case ClassId::Degen: return "DEGEN";
  }
  return "?";
}

ClassId class_from_name(const std::string& name) {
  static const std::map<std::string, ClassId> table = {
      {"D1", ClassId::D1}, {"D2", ClassId::D2}, {"D3", ClassId::D3},
      {"D4", ClassId::D4}, {"D5", ClassId::D5}, {"D6", ClassId::D6},
      {"T1", ClassId::T1}, {"T2", ClassId::T2}, {"T3", ClassId::T3},
      {"T4", ClassId::T4}, {"T5", ClassId::T5}, {"DEGEN", ClassId::Degen}};
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("class_from_name: unknown class " + name);
  return it->second;
}

std::vector<Pattern> class_patterns(ClassId id) {
  switch (id) {
    case ClassId::D1: return patterns_from_codes({123, 132});
    case ClassId::D2: return patterns_from_codes({132, 213});
    case ClassId::D3: return patterns_from_codes({132, 231});
    case ClassId::D4: return patterns_from_codes({132, 312});
    case ClassId::D5: return patterns_from_codes({132, 321});
    case ClassId::D6: return patterns_from_codes({123, 321});
    case ClassId::T1: return patterns_from_codes({123, 132, 213});
    case ClassId::T2: return patterns_from_codes({123, 132, 231});
    case ClassId::T3: return patterns_from_codes({132, 213, 231});
    case ClassId::T4: return patterns_from_codes({123, 132, 312});
    case ClassId::T5: return patterns_from_codes({123, 231, 312});
    case ClassId::Degen: return patterns_from_codes({123, 132, 321});
  }
  throw std::logic_error("class_patterns: bad id");
}

CanonicalClass canonical_class(const std::vector<Pattern>& R) {
  if (R.size() != 2 && R.size() != 3)
    throw std::invalid_argument("canonical_class: |R| must be 2 or 3");
  for (const Pattern& p : R)
    if (p.size() != 3)
      throw std::invalid_argument("canonical_class: patterns must have length 3");
  const auto target = sorted(R);
  {
    auto dedup = target;
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    if (dedup.size() != target.size())
      throw std::invalid_argument("canonical_class: repeated pattern");
  }

  const bool has_123 =
      std::find(target.begin(), target.end(), Pattern::from_code(123)) !=
      target.end();
  const bool has_321 =
      std::find(target.begin(), target.end(), Pattern::from_code(321)) !=
      target.end();

  std::vector<ClassId> candidates;
  if (has_123 && has_321) {
    candidates = {R.size() == 2 ? ClassId::D6 : ClassId::Degen};
  } else if (R.size() == 2) {
    candidates = {ClassId::D1, ClassId::D2, ClassId::D3, ClassId::D4,
                  ClassId::D5};
  } else {
    candidates = {ClassId::T1, ClassId::T2, ClassId::T3, ClassId::T4,
                  ClassId::T5};
  }

  // Words outer, so the shortest (then lexicographically smallest) word wins.
  // This matters: the canonical sets of D3/D4 and of T2/T4 lie in one
  // symmetry orbit, and word-first selection keeps every canonical set fixed
  // under the empty word.
  for (const SymmetryWord& w : all_words())
    for (ClassId id : candidates)
      if (push_patterns(class_patterns(id), w) == target) return {id, w};
  throw std::logic_error("canonical_class: no class matched");
}

BigInt class_cardinality(ClassId id, int n) {
  if (n < 1) throw std::invalid_argument("class_cardinality: n < 1");
  switch (id) {
    case ClassId::D1:
    case ClassId::D2:
    case ClassId::D3:
    case ClassId::D4:
      return pow2(n - 1);
    case ClassId::D5:
      return binomial(n, 2) + 1;
    case ClassId::D6:
    case ClassId::Degen:
      if (n >= 5) return 0;
      return static_cast<long long>(tiny_filter(class_patterns(id), n).size());
    case ClassId::T1:
      return fibonacci(n + 1);
    case ClassId::T2:
    case ClassId::T3:
    case ClassId::T4:
    case ClassId::T5:
      return n;
  }
  throw std::logic_error("class_cardinality: bad id");
}

std::vector<Permutation> generate_class(ClassId id, int n) {
  if (n < 1) throw std::invalid_argument("generate_class: n < 1");
  std::vector<Permutation> out;
  switch (id) {
    case ClassId::D1:
      for (const Composition& c : enumerate_compositions(n))
        out.push_back(phi1(c));
      break;
    case ClassId::D2:
      for (const Composition& c : enumerate_compositions(n))
        out.push_back(phi2(c));
      break;
    case ClassId::D3: {
      // Placement construction: values 2..n go to the front (bit 0) or the
      // back (bit 1); words iterated lexicographically.
      for (long long word = 0; word < (1LL << (n - 1)); ++word) {
        std::vector<int> seq = {1};
        for (int v = 2; v <= n; ++v) {
          const bool back = (word >> (n - 1 - (v - 1))) & 1;
          if (back)
            seq.push_back(v);
          else
            seq.insert(seq.begin(), v);
        }
        out.emplace_back(std::move(seq));
      }
      break;
    }
    case ClassId::D4:
      for (const Composition& c : enumerate_compositions(n))
        out.push_back(phi4(c));
      break;
    case ClassId::D5:
      out.push_back(Permutation::identity(n));
      for (int k = 1; k < n; ++k)
        for (int m = k + 1; m <= n; ++m) out.push_back(phi5(k, m, n));
      break;
    case ClassId::D6:
    case ClassId::Degen:
      if (n >= 5) return {};
      return tiny_filter(class_patterns(id), n);
    case ClassId::T1:
      for (const FibWord& w : fib_words(n - 1)) out.push_back(psi1(w));
      break;
    case ClassId::T2:
      for (int k = 1; k <= n; ++k) out.push_back(structure_t2(n, k));
      break;
    case ClassId::T3:
      for (int k = 1; k <= n; ++k) out.push_back(structure_t3(n, k));
      break;
    case ClassId::T4:
      for (int k = 0; k < n; ++k) out.push_back(structure_t4(n, k));
      break;
    case ClassId::T5:
      for (int k = 1; k <= n; ++k) out.push_back(structure_t5(n, k));
      break;
  }
  return out;
}

std::vector<Permutation> generate_avoiders(const std::vector<Pattern>& R,
                                           int n) {
  const CanonicalClass cc = canonical_class(R);
  std::vector<Permutation> out = generate_class(cc.id, n);
  if (!cc.word.empty())
    for (Permutation& sigma : out) sigma = apply_symmetry(sigma, cc.word);
  return out;
}

Permutation phi1(const Composition& c) {
  int n = 0;
  for (int p : c) {
    if (p < 1) throw std::invalid_argument("phi1: nonpositive part");
    n += p;
  }
  if (c.empty()) throw std::invalid_argument("phi1: empty composition");
  std::vector<int> v;
  int used = 0;
  for (int p : c) {
    const int m = n - used;  // block maximum
    for (int x = m - 1; x >= m - p + 1; --x) v.push_back(x);
    v.push_back(m);
    used += p;
  }
  return Permutation(std::move(v));
}

Composition phi1_inv(const Permutation& sigma) {
  const auto pos = right_to_left_maxima_positions(sigma);
  Composition c;
  int prev = 0;
  for (int i : pos) {
    c.push_back(i - prev);
    prev = i;
  }
  if (phi1(c) != sigma)
    throw std::invalid_argument("phi1_inv: input not in S_n(123,132)");
  return c;
}

Permutation phi2(const Composition& c) {
  int n = 0;
  for (int p : c) {
    if (p < 1) throw std::invalid_argument("phi2: nonpositive part");
    n += p;
  }
  if (c.empty()) throw std::invalid_argument("phi2: empty composition");
  std::vector<int> v;
  int used = 0;
  for (int p : c) {
    const int m = n - used;
    for (int x = m - p + 1; x <= m; ++x) v.push_back(x);
    used += p;
  }
  return Permutation(std::move(v));
}

Composition phi2_inv(const Permutation& sigma) {
  const auto pos = right_to_left_maxima_positions(sigma);
  Composition c;
  int prev = 0;
  for (int i : pos) {
    c.push_back(i - prev);
    prev = i;
  }
  if (phi2(c) != sigma)
    throw std::invalid_argument("phi2_inv: input not in S_n(132,213)");
  return c;
}

Permutation phi4(const Composition& written) {
  if (written.empty()) throw std::invalid_argument("phi4: empty composition");
  int n = 0;
  for (int p : written) {
    if (p < 1) throw std::invalid_argument("phi4: nonpositive part");
    n += p;
  }
  // The written order is c_k, ..., c_1; blocks are built from c_1 up and
  // emitted in reverse.
  Composition c(written.rbegin(), written.rend());
  const int k = static_cast<int>(c.size());
  std::vector<std::vector<int>> tau(k);
  int prefix = 0;  // c_1 + ... + c_{i-1}
  for (int i = 1; i <= k; ++i) {
    tau[i - 1].push_back(n - i + 1);
    if (c[i - 1] > 1) {
      const int m = prefix - i + 2;
      for (int x = m + c[i - 1] - 2; x >= m; --x) tau[i - 1].push_back(x);
    }
    prefix += c[i - 1];
  }
  std::vector<int> v;
  for (int i = k - 1; i >= 0; --i)
    v.insert(v.end(), tau[i].begin(), tau[i].end());
  return Permutation(std::move(v));
}

Composition phi4_inv(const Permutation& sigma) {
  const int n = sigma.size();
  const auto pos = left_to_right_maxima_positions(sigma);
  Composition c;
  for (size_t j = 0; j + 1 < pos.size(); ++j) c.push_back(pos[j + 1] - pos[j]);
  c.push_back(n + 1 - pos.back());
  if (phi4(c) != sigma)
    throw std::invalid_argument("phi4_inv: input not in S_n(132,312)");
  return c;
}

Permutation phi5(int k, int m, int n) {
  if (!(1 <= k && k < m && m <= n))
    throw std::invalid_argument("phi5: need 1 <= k < m <= n");
  std::vector<int> v;
  for (int x = m - k + 1; x <= m; ++x) v.push_back(x);
  for (int x = 1; x <= m - k; ++x) v.push_back(x);
  for (int x = m + 1; x <= n; ++x) v.push_back(x);
  return Permutation(std::move(v));
}

std::pair<int, int> phi5_inv(const Permutation& sigma) {
  const int n = sigma.size();
  // k is the last position with sigma_k > k, m its value.
  int k = 0;
  for (int i = 1; i <= n; ++i)
    if (sigma.at(i) > i) k = i;
  if (k == 0)
    throw std::invalid_argument("phi5_inv: identity has no preimage");
  const int m = sigma.at(k);
  if (phi5(k, m, n) != sigma)
    throw std::invalid_argument("phi5_inv: input not in S_n(132,321)");
  return {k, m};
}

Permutation psi1(const FibWord& w) {
  if (!is_fib_word(w)) throw std::invalid_argument("psi1: consecutive ones");
  const int n = static_cast<int>(w.size()) + 1;
  std::vector<int> remaining;
  for (int x = n; x >= 1; --x) remaining.push_back(x);  // descending
  std::vector<int> v;
  for (int i = 0; i < n - 1; ++i) {
    const int take = w[i] ? 1 : 0;  // 0: largest, 1: second largest
    v.push_back(remaining[take]);
    remaining.erase(remaining.begin() + take);
  }
  v.push_back(remaining[0]);
  return Permutation(std::move(v));
}

FibWord psi1_inv(const Permutation& sigma) {
  const int n = sigma.size();
  FibWord w;
  std::vector<int> remaining;
  for (int x = n; x >= 1; --x) remaining.push_back(x);
  for (int i = 1; i <= n - 1; ++i) {
    const int v = sigma.at(i);
    if (v == remaining[0])
      w.push_back(0);
    else if (remaining.size() >= 2 && v == remaining[1])
      w.push_back(1);
    else
      throw std::invalid_argument("psi1_inv: input not in S_n(123,132,213)");
    remaining.erase(std::find(remaining.begin(), remaining.end(), v));
  }
  if (!is_fib_word(w))
    throw std::invalid_argument("psi1_inv: input not in S_n(123,132,213)");
  return w;
}

std::vector<Permutation> insertion_family(int n,
                                          const std::vector<int>& occ_values) {
  if (n < 3) throw std::invalid_argument("insertion_family: n < 3");
  if (occ_values.size() != 3)
    throw std::invalid_argument("insertion_family: need a value triple");
  std::vector<bool> taken(n + 1, false);
  for (int v : occ_values) {
    if (v < 1 || v > n || taken[v])
      throw std::invalid_argument("insertion_family: bad value triple");
    taken[v] = true;
  }
  std::vector<int> rest;  // remaining values, decreasing
  for (int v = n; v >= 1; --v)
    if (!taken[v]) rest.push_back(v);

  std::vector<Permutation> out;
  const int bits = n - 3;
  for (long long word = 0; word < (1LL << bits); ++word) {
    std::vector<int> seq(occ_values);
    for (int i = 0; i < bits; ++i) {
      const int r = rest[i];
      const bool right = (word >> (bits - 1 - i)) & 1;
      // Positions of the leftmost (A) and rightmost (B) entries below r;
      // when none is below r the least entry plays A = B.
      int a = -1, b = -1;
      for (size_t j = 0; j < seq.size(); ++j) {
        if (seq[j] < r) {
          if (a < 0) a = static_cast<int>(j);
          b = static_cast<int>(j);
        }
      }
      if (a < 0) {
        auto it = std::min_element(seq.begin(), seq.end());
        a = b = static_cast<int>(it - seq.begin());
      }
      if (right)
        seq.insert(seq.begin() + b + 1, r);
      else
        seq.insert(seq.begin() + a, r);
    }
    out.emplace_back(std::move(seq));
  }
  return out;
}

namespace {

int position_of_value(const Permutation& sigma, int v) {
  for (int i = 1; i <= sigma.size(); ++i)
    if (sigma.at(i) == v) return i;
  throw std::logic_error("position_of_value: value missing");
}

Occurrence occurrence_of_values(const Permutation& sigma,
                                std::vector<int> values) {
  Occurrence occ;
  for (int v : values) occ.push_back(position_of_value(sigma, v));
  std::sort(occ.begin(), occ.end());
  return occ;
}

}  // namespace

std::pair<Permutation, Occurrence> structural_swap(ClassId id,
                                                   const Permutation& sigma,
                                                   const Occurrence& occ,
                                                   int q_from_code,
                                                   int q_to_code) {
  const int n = sigma.size();
  const Pattern q_from = Pattern::from_code(q_from_code);
  const Pattern q_to = Pattern::from_code(q_to_code);
  if (!is_occurrence(sigma, occ, q_from))
    throw std::invalid_argument("structural_swap: occ is not a q_from occurrence");
  if (!avoids(sigma, class_patterns(id)))
    throw std::invalid_argument("structural_swap: sigma not in the class");
  const auto vals = occurrence_values(sigma, occ);

  auto check = [&](const Permutation& out, std::vector<int> out_values) {
    Occurrence o = occurrence_of_values(out, std::move(out_values));
    if (!is_occurrence(out, o, q_to))
      throw std::logic_error("structural_swap: image occurrence broken");
    return std::make_pair(out, std::move(o));
  };

  if (id == ClassId::T2 && q_from_code == 213 && q_to_code == 312) {
    const int a = vals[0], b = vals[1], c = vals[2];
    return check(structure_t2(n, a), {c, b, a});
  }
  if (id == ClassId::T2 && q_from_code == 312 && q_to_code == 213) {
    const int c = vals[0], b = vals[1], a = vals[2];
    return check(structure_t2(n, c), {a, b, c});
  }
  if (id == ClassId::T3 && q_from_code == 123 && q_to_code == 312) {
    const int a = vals[0], b = vals[1], c = vals[2];
    const int k = sigma.at(n);  // structure parameter
    return check(structure_t3(n, c - 1), {n - k + c, a, b});
  }
  if (id == ClassId::T3 && q_from_code == 312 && q_to_code == 123) {
    const int h = vals[0], a = vals[1], b = vals[2];
    const int c = sigma.at(n) + 1;
    const int k = n - h + c;
    return check(structure_t3(n, k), {a, b, c});
  }
  if (id == ClassId::T4 && q_from_code == 213 && q_to_code == 231) {
    const int a = vals[0], b = vals[1];  // vals[2] == n
    const int k = n - position_of_value(sigma, n);
    return check(structure_t4(n, n - a + k), {n - a + b, n, n - a});
  }
  if (id == ClassId::T4 && q_from_code == 231 && q_to_code == 213) {
    const int x = vals[0], z = vals[2];  // vals[1] == n
    const int kp = n - position_of_value(sigma, n);
    return check(structure_t4(n, kp - z), {n - z, x - z, n});
  }
  throw std::invalid_argument("structural_swap: unsupported (id, q_from, q_to)");
}

}  // namespace patcount
