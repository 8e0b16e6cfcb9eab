#include <set>

#include "doctest.h"
#include "patcount/classes.hpp"
#include "patcount/formulas.hpp"
#include "patcount/oracle.hpp"
#include "patcount/trees.hpp"

using namespace patcount;

namespace {

// Canonical key for comparing colored trees across surgery: the permutation
// the tree reads back to, plus the colored positions.
std::pair<Permutation, Occurrence> key_of(const ColoredTree& ct) {
  const auto pos = tree_positions(ct.tree);
  Occurrence occ = {pos[ct.colored[0]], pos[ct.colored[1]],
                    pos[ct.colored[2]]};
  std::sort(occ.begin(), occ.end());
  return {perm_of(ct.tree), occ};
}

std::vector<ColoredTree> colored_family(ClassId id, int n, int code) {
  std::vector<ColoredTree> out;
  for (const auto& sigma : generate_class(id, n)) {
    const BinaryPlaneTree t = tree_of(sigma);
    for (const auto& occ : list_occurrences(sigma, Pattern::from_code(code)))
      out.push_back({t, occurrence_vertices(t, occ, Pattern::from_code(code))});
  }
  return out;
}

}  // namespace

TEST_CASE("tree_of / perm_of round trip over 132-avoiders (n <= 8)") {
  const std::vector<Pattern> R = {Pattern::from_code(132)};
  for (int n = 1; n <= 8; ++n) {
    for (const auto& sigma : filter_avoiders(n, R)) {
      const BinaryPlaneTree t = tree_of(sigma);
      CHECK(perm_of(t) == sigma);
      // tree_of uses the 0-based position as the vertex id.
      const auto pos = tree_positions(t);
      for (int v = 0; v < n; ++v) CHECK(pos[v] == v + 1);
    }
  }
  CHECK_THROWS(tree_of(Permutation::parse("132")));
  CHECK_THROWS(tree_of(Permutation::parse("2 4 3 1")));
}

TEST_CASE("chain trees are exactly the (132,231)-avoiders (n <= 7)") {
  const std::vector<Pattern> both = {Pattern::from_code(132),
                                     Pattern::from_code(231)};
  for (int n = 1; n <= 7; ++n)
    for (const auto& sigma : filter_avoiders(n, {Pattern::from_code(132)}))
      CHECK(tree_of(sigma).is_chain_tree() == avoids(sigma, both));
}

TEST_CASE("right-bare trees are exactly the (132,312)-avoiders (n <= 7)") {
  const std::vector<Pattern> both = {Pattern::from_code(132),
                                     Pattern::from_code(312)};
  for (int n = 1; n <= 7; ++n)
    for (const auto& sigma : filter_avoiders(n, {Pattern::from_code(132)}))
      CHECK(tree_of(sigma).is_right_bare() == avoids(sigma, both));
}

TEST_CASE("occurrence_vertices places ids at the occurrence positions") {
  const Permutation sigma = Permutation::parse("4 2 3 1");  // avoids 132
  const BinaryPlaneTree t = tree_of(sigma);
  const auto occs = list_occurrences(sigma, Pattern::from_code(231));
  REQUIRE(occs.size() == 1);  // values 2,3,1
  const auto verts = occurrence_vertices(t, occs[0], Pattern::from_code(231));
  CHECK(verts == std::array<int, 3>{1, 2, 3});
  CHECK_THROWS(occurrence_vertices(t, {1, 2, 3}, Pattern::from_code(123)));
}

TEST_CASE("rho worked example at n = 3") {
  const Permutation sigma = Permutation::parse("213");
  const BinaryPlaneTree t = tree_of(sigma);
  const ColoredTree ct{t, occurrence_vertices(t, {1, 2, 3},
                                              Pattern::from_code(213))};
  const ColoredTree image = rho(ct);
  CHECK(key_of(image) == std::pair(Permutation::parse("123"), Occurrence{1, 2, 3}));
  CHECK(rho_inv(image) == ct);
}

TEST_CASE("rho is a bijection colored-213 -> colored-123 (n <= 8)") {
  for (int n = 3; n <= 8; ++n) {
    const auto domain = colored_family(ClassId::D3, n, 213);
    const auto codomain = colored_family(ClassId::D3, n, 123);
    CHECK(BigInt(domain.size()) == closed_form(ClassId::D3, 213, n));
    CHECK(BigInt(codomain.size()) == closed_form(ClassId::D3, 123, n));
    CHECK(BigInt(domain.size()) == binomial(n, 3) * pow2(n - 3));
    std::set<std::pair<Permutation, Occurrence>> image, target;
    for (const auto& ct : codomain) target.insert(key_of(ct));
    for (const auto& ct : domain) {
      const ColoredTree out = rho(ct);
      image.insert(key_of(out));
      CHECK(rho_inv(out) == ct);
    }
    CHECK(image == target);
  }
}

TEST_CASE("varrho is a bijection colored-231 -> colored-123 (n <= 8)") {
  for (int n = 3; n <= 8; ++n) {
    const auto domain = colored_family(ClassId::D4, n, 231);
    const auto codomain = colored_family(ClassId::D4, n, 123);
    CHECK(BigInt(domain.size()) == closed_form(ClassId::D4, 231, n));
    CHECK(BigInt(codomain.size()) == closed_form(ClassId::D4, 123, n));
    if (n == 6) CHECK(domain.size() == 160);
    CHECK(BigInt(domain.size()) == binomial(n, 3) * pow2(n - 3));
    std::set<std::pair<Permutation, Occurrence>> image, target;
    for (const auto& ct : codomain) target.insert(key_of(ct));
    for (const auto& ct : domain) {
      const ColoredTree out = varrho(ct);
      CHECK(out.tree.is_right_bare());
      image.insert(key_of(out));
      CHECK(varrho_inv(out) == ct);
    }
    CHECK(image == target);
  }
}

TEST_CASE("surgery rejects wrong inputs") {
  const Permutation sigma = Permutation::parse("4 2 3 1");  // neither family
  const BinaryPlaneTree t = tree_of(sigma);
  const auto occ = list_occurrences(sigma, Pattern::from_code(231));
  REQUIRE(!occ.empty());
  const ColoredTree ct{t, occurrence_vertices(t, occ[0],
                                              Pattern::from_code(231))};
  CHECK_THROWS(rho(ct));         // not a chain tree / wrong colored pattern
  CHECK_THROWS(varrho_inv(ct));  // colored triple is 231, not 123
}

TEST_CASE("to_dot emits all vertices") {
  const Permutation sigma = Permutation::parse("213");
  const BinaryPlaneTree t = tree_of(sigma);
  const std::string dot =
      to_dot({t, occurrence_vertices(t, {1, 2, 3}, Pattern::from_code(213))});
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v0") != std::string::npos);
  CHECK(dot.find("v2") != std::string::npos);
  CHECK(dot.find("fillcolor") != std::string::npos);
}
