#pragma once

#include <string>
#include <vector>

#include "patcount/bigint.hpp"
#include "patcount/compositions.hpp"
#include "patcount/genfunc.hpp"
#include "patcount/perm.hpp"

namespace patcount {

// Canonical representatives of the multiply restricted classes. Every 2- or
// 3-element subset of S_3 maps onto exactly one of these via a symmetry word.
enum class ClassId {
  D1,  // (123,132)      |.| = 2^{n-1}
  D2,  // (132,213)      |.| = 2^{n-1}
  D3,  // (132,231)      |.| = 2^{n-1}
  D4,  // (132,312)      |.| = 2^{n-1}
  D5,  // (132,321)      |.| = C(n,2)+1
  D6,  // (123,321)      empty for n >= 5
  T1,  // (123,132,213)  |.| = F_{n+1}
  T2,  // (123,132,231)  |.| = n
  T3,  // (132,213,231)  |.| = n
  T4,  // (123,132,312)  |.| = n
  T5,  // (123,231,312)  |.| = n
  Degen,  // any triple containing {123,321}; empty for n >= 5
};

std::string class_name(ClassId id);
ClassId class_from_name(const std::string& name);
std::vector<Pattern> class_patterns(ClassId id);  // canonical avoided set
                                                  // (Degen: {123,321})

struct CanonicalClass {
  ClassId id;
  SymmetryWord word;  // applying word to the canonical set yields R
};

// Canonicalizes a 2- or 3-element pattern set. The returned word is the
// lexicographically smallest (shortest first, then c < r < i) among those
// whose pushforward of the canonical set equals R.
CanonicalClass canonical_class(const std::vector<Pattern>& R);

BigInt class_cardinality(ClassId id, int n);

// All members of the canonical class, in the iteration order of the
// underlying combinatorial domain (compositions and Fibonacci words
// lexicographic, structure parameter k ascending).
std::vector<Permutation> generate_class(ClassId id, int n);

// Members of S_n(R) for arbitrary R: symmetry pushforward of the canonical
// generator.
std::vector<Permutation> generate_avoiders(const std::vector<Pattern>& R,
                                           int n);

// phi1: compositions of n <-> S_n(123,132). Blocks m_i-1,...,m_i-c_i+1,m_i.
Permutation phi1(const Composition& c);
Composition phi1_inv(const Permutation& sigma);

// phi2: compositions of n <-> S_n(132,213). Blocks m_i-c_i+1,...,m_i.
Permutation phi2(const Composition& c);
Composition phi2_inv(const Permutation& sigma);

// phi4: compositions of n <-> S_n(132,312), built over left-to-right maxima.
// Parts are taken in the written order n = c_k + ... + c_1.
Permutation phi4(const Composition& c);
Composition phi4_inv(const Permutation& sigma);

// phi5: 2-element subsets {k < m} of [n] <-> S_n(132,321) minus the identity.
Permutation phi5(int k, int m, int n);
std::pair<int, int> phi5_inv(const Permutation& sigma);

// psi1: Fibonacci words of length n-1 <-> S_n(123,132,213), by the greedy
// largest / second-largest rule.
Permutation psi1(const FibWord& w);
FibWord psi1_inv(const Permutation& sigma);

// The 2^{n-3} members of S_n(132,231) containing the given value triple
// (listed in order of appearance) as a pattern occurrence. Indexed by the
// binary word over the insertions of the remaining values in decreasing
// order: bit 0 inserts on the left choice, bit 1 on the right.
std::vector<Permutation> insertion_family(int n,
                                          const std::vector<int>& occ_values);

// Occurrence-level swap bijections on the one-parameter triple classes:
//   T2: 213 <-> 312,  T3: 123 <-> 312,  T4: 213 <-> 231.
// Maps (sigma, occurrence of q_from) to (sigma', occurrence of q_to); both
// directions of each pair are supported and mutually inverse.
std::pair<Permutation, Occurrence> structural_swap(ClassId id,
                                                   const Permutation& sigma,
                                                   const Occurrence& occ,
                                                   int q_from_code,
                                                   int q_to_code);

}  // namespace patcount
