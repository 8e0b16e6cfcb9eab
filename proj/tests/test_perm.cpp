#include <algorithm>

#include "doctest.h"
#include "patcount/perm.hpp"

using namespace patcount;

namespace {

// Walks S_n lexicographically.
template <typename F>
void for_each_perm(int n, F f) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  do {
    f(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

const int kCodes[] = {123, 132, 213, 231, 312, 321};

}  // namespace

TEST_CASE("count_occurrences basics") {
  CHECK(count_occurrences(Permutation::parse("213"), Pattern::from_code(213)) == 1);
  CHECK(count_occurrences(Permutation::parse("1 2 3 4 5 6"),
                          Pattern::from_code(123)) == 20);
  // Independent O(n^3) triple scan over 8 9 7 5 4 3 6 1 2 gives 13.
  const Permutation sigma = Permutation::parse("8 9 7 5 4 3 6 1 2");
  const Pattern q = Pattern::from_code(231);
  long long brute = 0;
  for (int i = 1; i <= 9; ++i)
    for (int j = i + 1; j <= 9; ++j)
      for (int k = j + 1; k <= 9; ++k)
        if (sigma.at(k) < sigma.at(i) && sigma.at(i) < sigma.at(j)) ++brute;
  CHECK(brute == 13);
  CHECK(count_occurrences(sigma, q) == 13);
  // Shorter than the pattern.
  CHECK(count_occurrences(Permutation::parse("21"), q) == 0);
  CHECK(count_occurrences(Permutation(), q) == 0);
}

TEST_CASE("list_occurrences basics") {
  CHECK(list_occurrences(Permutation::parse("213"), Pattern::from_code(213)) ==
        std::vector<Occurrence>{{1, 2, 3}});
  CHECK(list_occurrences(Permutation::parse("321"), Pattern::from_code(123))
            .empty());
  CHECK(list_occurrences(Permutation::parse("231"), Pattern::from_code(231)) ==
        std::vector<Occurrence>{{1, 2, 3}});
  // Lexicographic order and agreement with the count.
  const Permutation sigma = Permutation::parse("8 9 7 5 4 3 6 1 2");
  for (int code : kCodes) {
    auto occs = list_occurrences(sigma, Pattern::from_code(code));
    CHECK(std::is_sorted(occs.begin(), occs.end()));
    CHECK((long long)occs.size() ==
          count_occurrences(sigma, Pattern::from_code(code)));
    for (const auto& occ : occs)
      CHECK(is_occurrence(sigma, occ, Pattern::from_code(code)));
  }
}

TEST_CASE("avoids basics") {
  CHECK(avoids(Permutation::parse("8 9 7 5 4 3 6 1 2"),
               {Pattern::from_code(123), Pattern::from_code(132)}));
  CHECK_FALSE(avoids(Permutation::parse("123"), {Pattern::from_code(123)}));
  CHECK(avoids(Permutation(), {Pattern::from_code(123), Pattern::from_code(321)}));
}

TEST_CASE("apply_symmetry basics") {
  const Permutation sigma = Permutation::parse("231");
  CHECK(apply_symmetry(sigma, SymmetryOp::complement) == Permutation::parse("213"));
  CHECK(apply_symmetry(sigma, SymmetryOp::reverse) == Permutation::parse("132"));
  CHECK(apply_symmetry(sigma, SymmetryOp::inverse) == Permutation::parse("312"));
}

TEST_CASE("symmetry ops are involutions and c,r commute") {
  const SymmetryOp ops[] = {SymmetryOp::complement, SymmetryOp::reverse,
                            SymmetryOp::inverse};
  for (int n = 0; n <= 6; ++n) {
    for_each_perm(n, [&](const Permutation& sigma) {
      for (SymmetryOp op : ops)
        CHECK(apply_symmetry(apply_symmetry(sigma, op), op) == sigma);
      CHECK(apply_symmetry(apply_symmetry(sigma, SymmetryOp::reverse),
                           SymmetryOp::complement) ==
            apply_symmetry(apply_symmetry(sigma, SymmetryOp::complement),
                           SymmetryOp::reverse));
    });
  }
}

TEST_CASE("symmetry transports occurrence counts (n <= 8)") {
  const SymmetryOp ops[] = {SymmetryOp::complement, SymmetryOp::reverse,
                            SymmetryOp::inverse};
  for (int n = 1; n <= 8; ++n) {
    for_each_perm(n, [&](const Permutation& sigma) {
      for (int code : kCodes) {
        const Pattern q = Pattern::from_code(code);
        const long long base = count_occurrences(sigma, q);
        for (SymmetryOp op : ops)
          CHECK(count_occurrences(apply_symmetry(sigma, op),
                                  apply_symmetry(q, op)) == base);
      }
    });
  }
}

TEST_CASE("avoidance transports under symmetry (n <= 7)") {
  const SymmetryOp ops[] = {SymmetryOp::complement, SymmetryOp::reverse,
                            SymmetryOp::inverse};
  std::vector<std::vector<Pattern>> sets;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      sets.push_back({Pattern::from_code(kCodes[i]), Pattern::from_code(kCodes[j])});
  for (int n = 1; n <= 7; ++n) {
    for_each_perm(n, [&](const Permutation& sigma) {
      for (const auto& R : sets) {
        const bool base = avoids(sigma, R);
        for (SymmetryOp op : ops) {
          std::vector<Pattern> Rop;
          for (const Pattern& q : R) Rop.push_back(apply_symmetry(q, op));
          CHECK(avoids(apply_symmetry(sigma, op), Rop) == base);
        }
      }
    });
  }
}

TEST_CASE("six length-3 pattern counts sum to C(n,3)") {
  for (int n = 0; n <= 7; ++n) {
    const long long total = (long long)n * (n - 1) * (n - 2) / 6;
    for_each_perm(n, [&](const Permutation& sigma) {
      long long sum = 0;
      for (int code : kCodes)
        sum += count_occurrences(sigma, Pattern::from_code(code));
      CHECK(sum == total);
    });
  }
}

TEST_CASE("count equals list length for general k") {
  const Permutation sigma = Permutation::parse("5 2 7 1 6 3 4");
  for (const char* p : {"12", "21", "1234", "2143", "3142"}) {
    const Pattern q = Pattern::parse(p);
    CHECK(count_occurrences(sigma, q) ==
          (long long)list_occurrences(sigma, q).size());
  }
}

TEST_CASE("permutation validation") {
  CHECK_THROWS(Permutation({1, 1, 2}));
  CHECK_THROWS(Permutation({0, 1}));
  CHECK_THROWS(Permutation({2, 3}));
  CHECK(Permutation::parse("2,1,3") == Permutation::parse("2 1 3"));
}
