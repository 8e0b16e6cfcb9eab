#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patcount/bigint.hpp"
#include "patcount/classes.hpp"
#include "patcount/perm.hpp"

namespace patcount {

// Exhaustive-scan limits. The default keeps a full verification run fast;
// the hard limit guards against accidental n! blowups.
struct OracleConfig {
  int ceiling = 9;              // largest n the scan will accept
  static constexpr int kHardLimit = 11;
};

// All sigma in S_n avoiding every pattern of R, lexicographic. Scans S_n by
// successor generation; throws when n exceeds the configured ceiling.
std::vector<Permutation> filter_avoiders(int n, const std::vector<Pattern>& R,
                                         const OracleConfig& cfg = {});

// Sum of count_occurrences(sigma, q) over filter_avoiders(n, R).
BigInt pattern_total(int n, const std::vector<Pattern>& R, const Pattern& q,
                     const OracleConfig& cfg = {});

// One (pattern set, pattern, n) cell of the cross-method report.
struct ReportEntry {
  std::string avoided;       // e.g. "123,132"
  std::string canonical;     // class name, e.g. "D1"
  std::string word;          // symmetry word mapping canonical set to R
  int pattern_code = 0;
  int n = 0;
  // Values per method; methods absent for a cell are left out.
  std::optional<BigInt> oracle;
  std::optional<BigInt> structural;
  std::optional<BigInt> formula;
  std::optional<BigInt> comp_sum;  // composition/pair sum where defined
  bool ok = true;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;
  bool all_ok = true;
  std::vector<std::string> failures;  // human-readable cell names
};

// Test fixture: adds delta to the formula value of one cell so the report
// machinery can be shown to catch a corrupted coefficient.
struct Corruption {
  std::string avoided;  // same format as ReportEntry::avoided
  int pattern_code = 0;
  int n = 0;
  long long delta = 1;
};

struct VerifyOptions {
  OracleConfig oracle;
  int structural_max_n = 0;  // 0: same as n_max
  // Restrict to these avoided sets (comma-joined codes); empty = all 35.
  std::vector<std::string> class_filter;
  std::optional<Corruption> corruption;
};

// Cross-checks oracle, structural generation, closed forms and the
// composition/pair sums over every 2- and 3-element subset of S_3 for
// 3 <= n <= n_max. Disagreements become FAIL entries, not exceptions.
VerificationReport verify_all(int n_max, const VerifyOptions& opts = {});

// All 15 pairs and 20 triples of distinct length-3 patterns, each as a
// sorted pattern vector.
std::vector<std::vector<Pattern>> all_pattern_subsets();

std::string pattern_set_string(const std::vector<Pattern>& R);

}  // namespace patcount
