#include "patcount/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace patcount {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size(), false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[v - 1])
      throw std::invalid_argument("Permutation: not a rearrangement of 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> v;
  if (text.find_first_of(" ,") == std::string::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("Permutation::parse: bad digit string");
      v.push_back(ch - '0');
    }
  } else {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    int x;
    while (in >> x) v.push_back(x);
    if (!in.eof()) throw std::invalid_argument("Permutation::parse: bad token");
  }
  return Permutation(std::move(v));
}

Permutation Permutation::from_code(int code) {
  if (code <= 0) throw std::invalid_argument("Permutation::from_code");
  std::vector<int> v;
  for (int c = code; c > 0; c /= 10) v.push_back(c % 10);
  std::reverse(v.begin(), v.end());
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string s;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values_[i]);
  }
  return s;
}

int Permutation::code() const {
  if (size() > 9) throw std::domain_error("Permutation::code: n > 9");
  int c = 0;
  for (int v : values_) c = c * 10 + v;
  return c;
}

char symmetry_op_char(SymmetryOp op) {
  switch (op) {
    case SymmetryOp::complement: return 'c';
    case SymmetryOp::reverse: return 'r';
    case SymmetryOp::inverse: return 'i';
  }
  return '?';
}

std::string symmetry_word_string(const SymmetryWord& w) {
  std::string s;
  for (SymmetryOp op : w) s += symmetry_op_char(op);
  return s;
}

SymmetryWord parse_symmetry_word(const std::string& s) {
  SymmetryWord w;
  for (char ch : s) {
    switch (ch) {
      case 'c': w.push_back(SymmetryOp::complement); break;
      case 'r': w.push_back(SymmetryOp::reverse); break;
      case 'i': w.push_back(SymmetryOp::inverse); break;
      default: throw std::invalid_argument("parse_symmetry_word: bad op");
    }
  }
  return w;
}

Permutation apply_symmetry(const Permutation& sigma, SymmetryOp op) {
  const int n = sigma.size();
  std::vector<int> out(n);
  switch (op) {
    case SymmetryOp::complement:
      for (int i = 0; i < n; ++i) out[i] = n + 1 - sigma.values()[i];
      break;
    case SymmetryOp::reverse:
      for (int i = 0; i < n; ++i) out[i] = sigma.values()[n - 1 - i];
      break;
    case SymmetryOp::inverse:
      for (int i = 0; i < n; ++i) out[sigma.values()[i] - 1] = i + 1;
      break;
  }
  return Permutation(std::move(out));
}

Permutation apply_symmetry(const Permutation& sigma, const SymmetryWord& w) {
  Permutation out = sigma;
  for (SymmetryOp op : w) out = apply_symmetry(out, op);
  return out;
}

SymmetryWord inverse_word(const SymmetryWord& w) {
  return SymmetryWord(w.rbegin(), w.rend());
}

namespace {

// Walks all increasing index tuples in lexicographic order, pruning on
// relative-order mismatch as the tuple is extended. Calls sink with 0-based
// indices; a false return from sink stops the walk.
template <typename Sink>
void scan_occurrences(const Permutation& sigma, const Pattern& q, Sink sink) {
  const int n = sigma.size();
  const int k = q.size();
  if (k == 0 || n < k) {
    if (k == 0) sink(std::vector<int>{});
    return;
  }
  std::vector<int> idx(k);
  // consistent(d): entries at idx[0..d] match the relative order of q[0..d].
  auto consistent = [&](int d) {
    const int vd = sigma.values()[idx[d]];
    const int qd = q.values()[d];
    for (int j = 0; j < d; ++j) {
      const int vj = sigma.values()[idx[j]];
      if ((q.values()[j] < qd) != (vj < vd)) return false;
    }
    return true;
  };
  int d = 0;
  idx[0] = -1;
  while (d >= 0) {
    ++idx[d];
    if (idx[d] > n - (k - d)) {
      --d;
      continue;
    }
    if (!consistent(d)) continue;
    if (d == k - 1) {
      if (!sink(idx)) return;
    } else {
      ++d;
      idx[d] = idx[d - 1];
    }
  }
}

}  // namespace

long long count_occurrences(const Permutation& sigma, const Pattern& q) {
  long long count = 0;
  scan_occurrences(sigma, q, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Occurrence> list_occurrences(const Permutation& sigma,
                                         const Pattern& q) {
  std::vector<Occurrence> out;
  scan_occurrences(sigma, q, [&](const std::vector<int>& idx) {
    Occurrence occ(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) occ[i] = idx[i] + 1;
    out.push_back(std::move(occ));
    return true;
  });
  return out;
}

bool contains(const Permutation& sigma, const Pattern& q) {
  bool found = false;
  scan_occurrences(sigma, q, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

bool avoids(const Permutation& sigma, const std::vector<Pattern>& patterns) {
  for (const Pattern& q : patterns)
    if (contains(sigma, q)) return false;
  return true;
}

bool is_occurrence(const Permutation& sigma, const Occurrence& occ,
                   const Pattern& q) {
  if (static_cast<int>(occ.size()) != q.size()) return false;
  for (size_t i = 0; i < occ.size(); ++i) {
    if (occ[i] < 1 || occ[i] > sigma.size()) return false;
    if (i > 0 && occ[i] <= occ[i - 1]) return false;
  }
  for (size_t i = 0; i < occ.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if ((q.values()[j] < q.values()[i]) !=
          (sigma.at(occ[j]) < sigma.at(occ[i])))
        return false;
  return true;
}

std::vector<int> occurrence_values(const Permutation& sigma,
                                   const Occurrence& occ) {
  std::vector<int> v(occ.size());
  for (size_t i = 0; i < occ.size(); ++i) v[i] = sigma.at(occ[i]);
  return v;
}

}  // namespace patcount
