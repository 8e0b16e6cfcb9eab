#pragma once

#include <vector>

#include "patcount/bigint.hpp"

namespace patcount {

// Ordered sum of positive parts. parts is nonempty and sums to n.
using Composition = std::vector<int>;

// All 2^{n-1} compositions of n, lexicographic by parts.
std::vector<Composition> enumerate_compositions(int n);

enum class CompositionStat { a, b, c, d };

// Closed forms of the four composition statistics:
//   a(n) = sum of last parts            = 2^n - 1
//   b(n) = sum of c_k(c_k - 1)          = 2^{n+1} - 2n - 2
//   c(n) = sum of part counts k         = (n+1) 2^{n-2}
//   d(n) = sum of k(k-1)                = (n^2+n-2) 2^{n-3}
// Evaluated in exact integer arithmetic (division last, remainder asserted),
// so the fractional-looking powers are fine at n = 1, 2.
BigInt composition_stat(CompositionStat kind, int n);

// The literal sum over enumerate_compositions(n); the test oracle for the
// closed forms above.
BigInt composition_stat_brute(CompositionStat kind, int n);

}  // namespace patcount
