#include "patcount/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "patcount/formulas.hpp"

namespace patcount {

std::vector<Permutation> filter_avoiders(int n, const std::vector<Pattern>& R,
                                         const OracleConfig& cfg) {
  if (n < 0) throw std::invalid_argument("filter_avoiders: n < 0");
  if (n > OracleConfig::kHardLimit)
    throw std::domain_error("filter_avoiders: n exceeds the hard limit");
  if (n > cfg.ceiling)
    throw std::domain_error("filter_avoiders: n exceeds the oracle ceiling");
  std::vector<Permutation> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  do {
    Permutation sigma(v);
    if (avoids(sigma, R)) out.push_back(std::move(sigma));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

BigInt pattern_total(int n, const std::vector<Pattern>& R, const Pattern& q,
                     const OracleConfig& cfg) {
  BigInt total = 0;
  for (const Permutation& sigma : filter_avoiders(n, R, cfg))
    total += count_occurrences(sigma, q);
  return total;
}

std::vector<std::vector<Pattern>> all_pattern_subsets() {
  const int codes[] = {123, 132, 213, 231, 312, 321};
  std::vector<std::vector<Pattern>> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      out.push_back({Pattern::from_code(codes[i]), Pattern::from_code(codes[j])});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        out.push_back({Pattern::from_code(codes[i]),
                       Pattern::from_code(codes[j]),
                       Pattern::from_code(codes[k])});
  return out;
}

std::string pattern_set_string(const std::vector<Pattern>& R) {
  std::vector<int> codes;
  for (const Pattern& p : R) codes.push_back(p.code());
  std::sort(codes.begin(), codes.end());
  std::string s;
  for (size_t i = 0; i < codes.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(codes[i]);
  }
  return s;
}

VerificationReport verify_all(int n_max, const VerifyOptions& opts) {
  const int codes[] = {123, 132, 213, 231, 312, 321};
  const int structural_max =
      opts.structural_max_n > 0 ? opts.structural_max_n : n_max;
  VerificationReport report;

  for (const auto& R : all_pattern_subsets()) {
    const std::string avoided = pattern_set_string(R);
    if (!opts.class_filter.empty() &&
        std::find(opts.class_filter.begin(), opts.class_filter.end(),
                  avoided) == opts.class_filter.end())
      continue;
    const CanonicalClass cc = canonical_class(R);
    const SymmetryWord back = inverse_word(cc.word);  // R frame -> canonical

    for (int n = 3; n <= n_max; ++n) {
      // One structural generation per (R, n), shared across the 6 patterns.
      std::optional<std::vector<Permutation>> members;
      if (n <= structural_max) members = generate_avoiders(R, n);
      std::optional<std::vector<Permutation>> scanned;
      if (n <= opts.oracle.ceiling) scanned = filter_avoiders(n, R, opts.oracle);

      for (int code : codes) {
        ReportEntry e;
        e.avoided = avoided;
        e.canonical = class_name(cc.id);
        e.word = symmetry_word_string(cc.word);
        e.pattern_code = code;
        e.n = n;

        const Pattern q = Pattern::from_code(code);
        // Transport the pattern into the canonical frame for the formula.
        const int canon_code = apply_symmetry(q, back).code();
        e.formula = closed_form(cc.id, canon_code, n);
        if (opts.corruption && opts.corruption->avoided == avoided &&
            opts.corruption->pattern_code == code && opts.corruption->n == n)
          *e.formula += opts.corruption->delta;

        if (scanned) {
          BigInt total = 0;
          for (const Permutation& sigma : *scanned)
            total += count_occurrences(sigma, q);
          e.oracle = total;
        }
        if (members) {
          BigInt total = 0;
          for (const Permutation& sigma : *members)
            total += count_occurrences(sigma, q);
          e.structural = total;
        }
        if (has_composition_sum(cc.id, canon_code))
          e.comp_sum = composition_sum(cc.id, canon_code, n);
        else if (cc.id == ClassId::D5 &&
                 (canon_code == 213 || canon_code == 312))
          e.comp_sum = pair_sum(canon_code, n);

        const BigInt& ref = *e.formula;
        e.ok = (!e.oracle || *e.oracle == ref) &&
               (!e.structural || *e.structural == ref) &&
               (!e.comp_sum || *e.comp_sum == ref);
        if (!e.ok) {
          report.all_ok = false;
          report.failures.push_back("S_" + std::to_string(n) + "(" + avoided +
                                    ") pattern " + std::to_string(code));
        }
        report.entries.push_back(std::move(e));
      }
    }
  }
  return report;
}

}  // namespace patcount
