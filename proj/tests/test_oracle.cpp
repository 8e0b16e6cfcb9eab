#include <set>

#include "doctest.h"
#include "patcount/formulas.hpp"
#include "patcount/oracle.hpp"

using namespace patcount;

TEST_CASE("filter_avoiders basics") {
  CHECK(filter_avoiders(0, {Pattern::from_code(123)}).size() == 1);
  CHECK(filter_avoiders(3, {Pattern::from_code(123), Pattern::from_code(132)})
            .size() == 4);
  const auto all = filter_avoiders(4, {});
  CHECK(all.size() == 24);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("filter_avoiders enforces the limits") {
  CHECK_THROWS_AS(filter_avoiders(10, {Pattern::from_code(123)}),
                  std::domain_error);
  OracleConfig raised;
  raised.ceiling = 10;
  CHECK_NOTHROW(filter_avoiders(5, {Pattern::from_code(123)}, raised));
  raised.ceiling = 99;  // the hard limit still applies
  CHECK_THROWS_AS(filter_avoiders(12, {Pattern::from_code(123)}, raised),
                  std::domain_error);
  CHECK_THROWS_AS(filter_avoiders(-1, {}), std::invalid_argument);
}

TEST_CASE("cardinalities match the filter for every subset (n <= 8)") {
  for (const auto& R : all_pattern_subsets()) {
    const CanonicalClass cc = canonical_class(R);
    for (int n = 1; n <= 8; ++n)
      CHECK(BigInt(filter_avoiders(n, R).size()) ==
            class_cardinality(cc.id, n));
  }
}

TEST_CASE("pattern_total spot values") {
  CHECK(pattern_total(8, class_patterns(ClassId::D1),
                      Pattern::from_code(321)) == 4801);
  CHECK(pattern_total(6, class_patterns(ClassId::T1),
                      Pattern::from_code(312)) == 40);
  CHECK(pattern_total(5, class_patterns(ClassId::D6),
                      Pattern::from_code(213)) == 0);
}

TEST_CASE("all_pattern_subsets: 15 pairs + 20 triples, all distinct") {
  const auto subsets = all_pattern_subsets();
  CHECK(subsets.size() == 35);
  std::set<std::string> names;
  int pairs = 0;
  for (const auto& R : subsets) {
    names.insert(pattern_set_string(R));
    if (R.size() == 2) ++pairs;
  }
  CHECK(names.size() == 35);
  CHECK(pairs == 15);
  CHECK(pattern_set_string({Pattern::from_code(321), Pattern::from_code(123)}) ==
        "123,321");
}

TEST_CASE("verify_all: clean run agrees across methods") {
  VerifyOptions opts;
  opts.oracle.ceiling = 6;  // keep the unit test quick; acceptance goes deeper
  const auto report = verify_all(6, opts);
  CHECK(report.all_ok);
  CHECK(report.failures.empty());
  // 35 subsets x n in 3..6 x 6 patterns.
  CHECK(report.entries.size() == 35 * 4 * 6);
  for (const auto& e : report.entries) {
    CHECK(e.ok);
    REQUIRE(e.formula.has_value());
    REQUIRE(e.oracle.has_value());
    REQUIRE(e.structural.has_value());
    CHECK(*e.oracle == *e.formula);
    CHECK(*e.structural == *e.formula);
    if (e.comp_sum) CHECK(*e.comp_sum == *e.formula);
  }
}

TEST_CASE("verify_all: class filter restricts the report") {
  VerifyOptions opts;
  opts.oracle.ceiling = 5;
  opts.class_filter = {"123,132"};
  const auto report = verify_all(5, opts);
  CHECK(report.entries.size() == 3 * 6);
  for (const auto& e : report.entries) {
    CHECK(e.avoided == "123,132");
    CHECK(e.canonical == "D1");
  }
}

TEST_CASE("verify_all: corruption is caught and named") {
  VerifyOptions opts;
  opts.oracle.ceiling = 5;
  Corruption c;
  c.avoided = "132,213";
  c.pattern_code = 123;
  c.n = 5;
  c.delta = 1;
  opts.corruption = c;
  const auto report = verify_all(5, opts);
  CHECK_FALSE(report.all_ok);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0] == "S_5(132,213) pattern 123");
  int bad = 0;
  for (const auto& e : report.entries)
    if (!e.ok) {
      ++bad;
      CHECK(e.avoided == "132,213");
      CHECK(e.pattern_code == 123);
      CHECK(e.n == 5);
    }
  CHECK(bad == 1);
}

TEST_CASE("verify_all: structural-only cells beyond the oracle ceiling") {
  VerifyOptions opts;
  opts.oracle.ceiling = 4;
  opts.class_filter = {"123,132,213"};
  const auto report = verify_all(7, opts);
  CHECK(report.all_ok);
  for (const auto& e : report.entries) {
    CHECK(e.oracle.has_value() == (e.n <= 4));
    CHECK(e.structural.has_value());
  }
}
