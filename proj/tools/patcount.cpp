// patcount: command-line surface over the pattern-count library.
//
// Subcommands: enumerate, count, verify, bijection, gf. Output is JSON by
// default (integers as decimal strings); verify also speaks CSV. Exit codes:
// 0 success / agreement, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "patcount/classes.hpp"
#include "patcount/formulas.hpp"
#include "patcount/genfunc.hpp"
#include "patcount/oracle.hpp"
#include "patcount/trees.hpp"

using json = nlohmann::ordered_json;
using namespace patcount;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Pattern parse_pattern(const std::string& digits) {
  try {
    Pattern p = Permutation::parse(digits);
    if (p.size() != 3) throw UsageError("pattern must have length 3: " + digits);
    return p;
  } catch (const std::invalid_argument&) {
    throw UsageError("bad pattern: " + digits);
  }
}

std::vector<Pattern> parse_avoid(const std::string& csv) {
  std::vector<Pattern> out;
  for (const std::string& item : split(csv, ','))
    out.push_back(parse_pattern(item));
  if (out.size() != 2 && out.size() != 3)
    throw UsageError("--avoid needs 2 or 3 comma-separated patterns");
  return out;
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int> out;
  for (const std::string& item : split(csv, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + ": " + csv);
    }
  }
  return out;
}

Permutation parse_perm_arg(const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad permutation: ") + e.what());
  }
}

json perm_json(const Permutation& sigma) { return json(sigma.values()); }

json canonical_json(const CanonicalClass& cc) {
  return json{{"class", class_name(cc.id)},
              {"word", symmetry_word_string(cc.word)}};
}

OracleConfig oracle_config(int flag_ceiling) {
  OracleConfig cfg;
  if (const char* env = std::getenv("PATCOUNT_ORACLE_CEILING")) {
    try {
      cfg.ceiling = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("bad PATCOUNT_ORACLE_CEILING value");
    }
  }
  if (flag_ceiling > 0) cfg.ceiling = flag_ceiling;
  return cfg;
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

// ---- enumerate ----

int run_enumerate(int n, const std::string& avoid, const std::string& method,
                  int ceiling) {
  const auto R = parse_avoid(avoid);
  const CanonicalClass cc = canonical_class(R);
  std::vector<Permutation> members;
  if (method == "structural")
    members = generate_avoiders(R, n);
  else if (method == "filter")
    members = filter_avoiders(n, R, oracle_config(ceiling));
  else
    throw UsageError("--method must be structural or filter");

  json perms = json::array();
  for (const auto& sigma : members) perms.push_back(perm_json(sigma));
  emit(json{{"command", "enumerate"},
            {"params", {{"n", n}, {"avoid", pattern_set_string(R)},
                        {"method", method}}},
            {"canonical", canonical_json(cc)},
            {"cardinality", std::to_string(members.size())},
            {"permutations", perms}});
  return 0;
}

// ---- count ----

int run_count(int n, const std::string& avoid, const std::string& pattern,
              const std::string& method, int ceiling) {
  const auto R = parse_avoid(avoid);
  const Pattern q = parse_pattern(pattern);
  const CanonicalClass cc = canonical_class(R);
  const int canon_code = apply_symmetry(q, inverse_word(cc.word)).code();

  BigInt value;
  if (method == "formula") {
    value = closed_form(cc.id, canon_code, n);
  } else if (method == "structural") {
    value = 0;
    for (const auto& sigma : generate_avoiders(R, n))
      value += count_occurrences(sigma, q);
  } else if (method == "oracle") {
    value = pattern_total(n, R, q, oracle_config(ceiling));
  } else if (method == "gf") {
    if (cc.id != ClassId::T1)
      throw UsageError("--method gf only applies to the (123,132,213) class");
    value = closed_form(cc.id, canon_code, n);
  } else if (method == "sum") {
    if (has_composition_sum(cc.id, canon_code))
      value = n >= 3 ? composition_sum(cc.id, canon_code, n) : BigInt(0);
    else if (cc.id == ClassId::D5 && (canon_code == 213 || canon_code == 312))
      value = n >= 3 ? pair_sum(canon_code, n) : BigInt(0);
    else
      throw UsageError("--method sum has no formula for this (class, pattern)");
  } else {
    throw UsageError("--method must be formula|structural|oracle|gf|sum");
  }

  emit(json{{"command", "count"},
            {"params", {{"n", n}, {"avoid", pattern_set_string(R)},
                        {"pattern", q.code()}, {"method", method}}},
            {"canonical", canonical_json(cc)},
            {"canonical_pattern", canon_code},
            {"value", value.str()}});
  return 0;
}

// ---- verify ----

std::optional<Corruption> parse_corruption(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // avoided:pattern:n[:delta], e.g. "132,213:123:5:1"
  const auto parts = split(text, ':');
  if (parts.size() != 3 && parts.size() != 4)
    throw UsageError("--corrupt wants avoided:pattern:n[:delta]");
  Corruption c;
  c.avoided = pattern_set_string(parse_avoid(parts[0]));
  c.pattern_code = parse_pattern(parts[1]).code();
  try {
    c.n = std::stoi(parts[2]);
    c.delta = parts.size() == 4 ? std::stoll(parts[3]) : 1;
  } catch (const std::exception&) {
    throw UsageError("--corrupt wants numeric n and delta");
  }
  if (c.delta == 0) throw UsageError("--corrupt delta must be nonzero");
  return c;
}

std::string opt_str(const std::optional<BigInt>& v) {
  return v ? v->str() : std::string();
}

int run_verify(int max_n, const std::vector<std::string>& classes,
               const std::string& format, int ceiling, int structural_max,
               const std::string& corrupt) {
  VerifyOptions opts;
  opts.oracle = oracle_config(ceiling);
  opts.structural_max_n = structural_max;
  opts.corruption = parse_corruption(corrupt);
  for (const std::string& cls : classes) {
    // Accept either a canonical class name or a comma-joined pattern set.
    try {
      opts.class_filter.push_back(
          pattern_set_string(class_patterns(class_from_name(cls))));
    } catch (const std::invalid_argument&) {
      opts.class_filter.push_back(pattern_set_string(parse_avoid(cls)));
    }
  }

  const VerificationReport report = verify_all(max_n, opts);

  if (format == "csv") {
    std::cout << "avoided;canonical;word;pattern;n;oracle;structural;formula;"
                 "comp_sum;ok\n";
    for (const auto& e : report.entries)
      std::cout << e.avoided << ';' << e.canonical << ';' << e.word << ';'
                << e.pattern_code << ';' << e.n << ';' << opt_str(e.oracle)
                << ';' << opt_str(e.structural) << ';' << opt_str(e.formula)
                << ';' << opt_str(e.comp_sum) << ';'
                << (e.ok ? "PASS" : "FAIL") << "\n";
  } else if (format == "json") {
    json entries = json::array();
    for (const auto& e : report.entries) {
      json row{{"avoided", e.avoided},   {"canonical", e.canonical},
               {"word", e.word},         {"pattern", e.pattern_code},
               {"n", e.n},               {"ok", e.ok}};
      if (e.oracle) row["oracle"] = e.oracle->str();
      if (e.structural) row["structural"] = e.structural->str();
      if (e.formula) row["formula"] = e.formula->str();
      if (e.comp_sum) row["comp_sum"] = e.comp_sum->str();
      entries.push_back(std::move(row));
    }
    emit(json{{"command", "verify"},
              {"params", {{"max_n", max_n}, {"format", format}}},
              {"all_ok", report.all_ok},
              {"failures", report.failures},
              {"entries", entries}});
  } else {
    throw UsageError("--format must be json or csv");
  }

  if (!report.all_ok) {
    for (const std::string& cell : report.failures)
      std::cerr << "FAIL " << cell << "\n";
    return 1;
  }
  return 0;
}

// ---- bijection ----

std::pair<ColoredTree, Permutation> colored_input(const std::string& input,
                                                  const std::string& occ_csv,
                                                  int code) {
  const Permutation sigma = parse_perm_arg(input);
  const std::vector<int> occ = parse_int_list(occ_csv, "--occ");
  if (occ.size() != 3) throw UsageError("--occ wants three positions");
  try {
    const BinaryPlaneTree t = tree_of(sigma);
    return {{t, occurrence_vertices(t, occ, Pattern::from_code(code))}, sigma};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json colored_output(const ColoredTree& ct, bool dot) {
  const Permutation sigma = perm_of(ct.tree);
  const auto pos = tree_positions(ct.tree);
  std::vector<int> occ = {pos[ct.colored[0]], pos[ct.colored[1]],
                          pos[ct.colored[2]]};
  std::sort(occ.begin(), occ.end());
  json out{{"permutation", perm_json(sigma)}, {"occurrence", occ}};
  if (dot) out["dot"] = to_dot(ct);
  return out;
}

int run_bijection(const std::string& name, const std::string& input,
                  bool inverse, const std::string& occ_csv,
                  const std::string& cls, const std::string& from,
                  const std::string& to, bool dot) {
  json result;
  try {
    if (name == "phi1" || name == "phi2" || name == "phi4") {
      auto fwd = name == "phi1" ? phi1 : name == "phi2" ? phi2 : phi4;
      auto inv = name == "phi1" ? phi1_inv
                                : name == "phi2" ? phi2_inv : phi4_inv;
      if (inverse) {
        const Composition c = inv(parse_perm_arg(input));
        result = json{{"composition", c}};
      } else {
        const Composition c = parse_int_list(input, "composition");
        result = json{{"permutation", perm_json(fwd(c))}};
      }
    } else if (name == "phi5") {
      if (inverse) {
        const auto [k, m] = phi5_inv(parse_perm_arg(input));
        result = json{{"k", k}, {"m", m}};
      } else {
        const auto kmn = parse_int_list(input, "k,m,n triple");
        if (kmn.size() != 3) throw UsageError("phi5 wants --input k,m,n");
        result = json{{"permutation", perm_json(phi5(kmn[0], kmn[1], kmn[2]))}};
      }
    } else if (name == "psi1") {
      if (inverse) {
        result = json{{"word", fib_word_string(psi1_inv(parse_perm_arg(input)))}};
      } else {
        result = json{{"permutation", perm_json(psi1(parse_fib_word(input)))}};
      }
    } else if (name == "rho" || name == "varrho") {
      const bool is_rho = name == "rho";
      const int in_code = inverse ? 123 : (is_rho ? 213 : 231);
      const ColoredTree ct = colored_input(input, occ_csv, in_code).first;
      const ColoredTree image = is_rho ? (inverse ? rho_inv(ct) : rho(ct))
                                       : (inverse ? varrho_inv(ct) : varrho(ct));
      result = colored_output(image, dot);
    } else if (name == "swap") {
      if (cls.empty() || from.empty() || to.empty())
        throw UsageError("swap wants --class, --from, and --to");
      const ClassId id = class_from_name(cls);
      const std::vector<int> occ = parse_int_list(occ_csv, "--occ");
      const auto [sigma2, occ2] =
          structural_swap(id, parse_perm_arg(input), occ,
                          parse_pattern(from).code(), parse_pattern(to).code());
      result = json{{"permutation", perm_json(sigma2)}, {"occurrence", occ2}};
    } else {
      throw UsageError("unknown bijection: " + name);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  emit(json{{"command", "bijection"},
            {"params", {{"name", name}, {"input", input},
                        {"inverse", inverse}}},
            {"result", result}});
  return 0;
}

// ---- gf ----

int run_gf(const std::string& name, const std::string& num,
           const std::string& den, int terms) {
  RationalGF gf;
  if (name == "t1_312") gf = gf_t1_312();
  else if (name == "t1_321") gf = gf_t1_321();
  else if (name == "fib") gf = gf_fib();
  else if (name == "custom") {
    if (num.empty() || den.empty())
      throw UsageError("gf custom wants --num and --den coefficient lists");
    try {
      gf = {IntPolynomial::parse(num), IntPolynomial::parse(den)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    throw UsageError("--name must be t1_312|t1_321|fib|custom");
  }

  std::vector<BigInt> coeffs;
  try {
    coeffs = gf_coefficients(gf, terms);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json list = json::array();
  for (const BigInt& c : coeffs) list.push_back(c.str());
  emit(json{{"command", "gf"},
            {"params", {{"name", name}, {"terms", terms}}},
            {"numerator", gf.numerator.to_string()},
            {"denominator", gf.denominator.to_string()},
            {"coefficients", list}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pattern counting on multiply restricted permutations"};
  app.require_subcommand(1);

  int n = 0, max_n = 0, terms = 8, ceiling = 0, structural_max = 0;
  std::string avoid, pattern, method_enum = "structural",
              method_count = "formula", format = "json", name, input,
              occ_csv, cls, from, to, num, den, corrupt;
  std::vector<std::string> classes;
  bool inverse = false, dot = false;

  auto* cmd_enum = app.add_subcommand("enumerate", "List all avoiders");
  cmd_enum->add_option("--n", n, "Permutation length")->required();
  cmd_enum->add_option("--avoid", avoid, "Patterns, e.g. 123,132")->required();
  cmd_enum->add_option("--method", method_enum, "structural|filter");
  cmd_enum->add_option("--oracle-ceiling", ceiling, "Filter scan limit");

  auto* cmd_count = app.add_subcommand("count", "Total occurrences of a pattern");
  cmd_count->add_option("--n", n, "Permutation length")->required();
  cmd_count->add_option("--avoid", avoid, "Patterns, e.g. 123,132")->required();
  cmd_count->add_option("--pattern", pattern, "Counted pattern")->required();
  cmd_count->add_option("--method", method_count,
                        "formula|structural|oracle|gf|sum");
  cmd_count->add_option("--oracle-ceiling", ceiling, "Oracle scan limit");

  auto* cmd_verify = app.add_subcommand("verify", "Cross-method verification");
  cmd_verify->add_option("--max-n", max_n, "Largest n")->required();
  cmd_verify->add_option("--classes", classes,
                         "Restrict to these avoided sets or class names");
  cmd_verify->add_option("--format", format, "json|csv");
  cmd_verify->add_option("--oracle-ceiling", ceiling, "Oracle scan limit");
  cmd_verify->add_option("--structural-max-n", structural_max,
                         "Structural generation limit");
  cmd_verify->add_option("--corrupt", corrupt,
                         "Negative-control fixture avoided:pattern:n[:delta]");

  auto* cmd_bij = app.add_subcommand("bijection", "Apply a named bijection");
  cmd_bij->add_option("--name", name, "phi1|phi2|phi4|phi5|psi1|rho|varrho|swap")
      ->required();
  cmd_bij->add_option("--input", input, "Composition, word, or permutation")
      ->required();
  cmd_bij->add_flag("--inverse", inverse, "Apply the inverse direction");
  cmd_bij->add_option("--occ", occ_csv, "Occurrence positions i,j,k");
  cmd_bij->add_option("--class", cls, "T2|T3|T4 (swap only)");
  cmd_bij->add_option("--from", from, "Source pattern (swap only)");
  cmd_bij->add_option("--to", to, "Target pattern (swap only)");
  cmd_bij->add_flag("--dot", dot, "Include GraphViz text (rho/varrho)");

  auto* cmd_gf = app.add_subcommand("gf", "Generating-function coefficients");
  cmd_gf->add_option("--name", name, "t1_312|t1_321|fib|custom")->required();
  cmd_gf->add_option("--num", num, "Numerator coefficients, constant first");
  cmd_gf->add_option("--den", den, "Denominator coefficients, constant first");
  cmd_gf->add_option("--terms", terms, "Highest exponent to expand");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_enum->parsed())
      return run_enumerate(n, avoid, method_enum, ceiling);
    if (cmd_count->parsed())
      return run_count(n, avoid, pattern, method_count, ceiling);
    if (cmd_verify->parsed())
      return run_verify(max_n, classes, format, ceiling, structural_max,
                        corrupt);
    if (cmd_bij->parsed())
      return run_bijection(name, input, inverse, occ_csv, cls, from, to, dot);
    if (cmd_gf->parsed()) return run_gf(name, num, den, terms);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
