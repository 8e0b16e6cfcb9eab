#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace patcount {

// A permutation of {1, ..., n} in one-line notation. Positions and values
// are 1-based throughout; values[i] is the entry at position i+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  // Parses "8 9 7 5 4 3 6 1 2" or the digit string "897543612" (n <= 9).
  static Permutation parse(const std::string& text);
  // Length-3 pattern from its numeric code: 213 -> [2,1,3].
  static Permutation from_code(int code);

  int size() const { return static_cast<int>(values_.size()); }
  int at(int pos) const { return values_[pos - 1]; }  // 1-based
  const std::vector<int>& values() const { return values_; }

  std::string to_string() const;  // space separated one-line notation
  int code() const;               // 213 for [2,1,3]; only for n <= 9

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

// A pattern is itself a permutation (of length k; this project uses k = 3
// throughout, but the counting operations accept any k).
using Pattern = Permutation;

// Strictly increasing 1-based positions witnessing one pattern occurrence.
using Occurrence = std::vector<int>;

enum class SymmetryOp { complement, reverse, inverse };

// Left-to-right application order.
using SymmetryWord = std::vector<SymmetryOp>;

char symmetry_op_char(SymmetryOp op);            // 'c', 'r', 'i'
std::string symmetry_word_string(const SymmetryWord& w);
SymmetryWord parse_symmetry_word(const std::string& s);

Permutation apply_symmetry(const Permutation& sigma, SymmetryOp op);
Permutation apply_symmetry(const Permutation& sigma, const SymmetryWord& w);

// Every op is an involution, so the inverse word is the reversed word.
SymmetryWord inverse_word(const SymmetryWord& w);

// Number of index tuples i_1 < ... < i_k whose entries are order-isomorphic
// to q. Zero when sigma is shorter than q.
long long count_occurrences(const Permutation& sigma, const Pattern& q);

// The witnesses behind count_occurrences, in lexicographic index order.
std::vector<Occurrence> list_occurrences(const Permutation& sigma,
                                         const Pattern& q);

bool contains(const Permutation& sigma, const Pattern& q);
bool avoids(const Permutation& sigma, const std::vector<Pattern>& patterns);

// True iff the entries of sigma at the given positions are order-isomorphic
// to q.
bool is_occurrence(const Permutation& sigma, const Occurrence& occ,
                   const Pattern& q);

// Values of sigma at the occurrence positions, in position order.
std::vector<int> occurrence_values(const Permutation& sigma,
                                   const Occurrence& occ);

}  // namespace patcount
