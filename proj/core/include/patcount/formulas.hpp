#pragma once

#include "patcount/bigint.hpp"
#include "patcount/classes.hpp"

namespace patcount {

// Exact total number of q-occurrences over the canonical class, n >= 3
// (0 for n < 3). Every fractional coefficient is evaluated division-last in
// exact integer arithmetic. T1's nonzero patterns are taken from the
// generating-function coefficients; D6 and DEGEN are brute-forced at the
// few n where they are nonempty.
BigInt closed_form(ClassId id, int pattern_code, int n);

// True iff closed_form has a genuine formula route for this key (false for
// the D6/DEGEN brute-force fallback).
bool has_closed_form(ClassId id, int pattern_code);

// The composition-sum forms, evaluated literally over all compositions of n.
// Defined for (D1, 213), (D1, 231), (D2, 123), (D2, 231), (D4, 123).
BigInt composition_sum(ClassId id, int pattern_code, int n);
bool has_composition_sum(ClassId id, int pattern_code);

// The two-subset sums for D5: sum over 1 <= k < m <= n of
//   213: k (m-k) (n-m),   312: k C(m-k, 2). Both equal C(n+2, 5).
BigInt pair_sum(int pattern_code, int n);

// Closed form of sum_{k=1}^{n-1} k^p for p in {1,2,3,4}; n >= 2.
BigInt power_sum(int p, int n);
BigInt power_sum_brute(int p, int n);

}  // namespace patcount
