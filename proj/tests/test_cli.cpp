// End-to-end tests that drive the binary the way a user would.

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef PATCOUNT_CLI_PATH
#error "PATCOUNT_CLI_PATH must point at the patcount binary"
#endif

namespace {

using json = nlohmann::json;

struct RunResult {
  std::string output;
  int exit_code = -1;

  json parsed() const { return json::parse(output); }
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(PATCOUNT_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("count: formula value from the tables") {
  const auto r = run("count --n 8 --avoid 123,132 --pattern 321");
  REQUIRE(r.exit_code == 0);
  const json out = r.parsed();
  CHECK(out["value"] == "4801");
  CHECK(out["canonical"]["class"] == "D1");
  CHECK(out["canonical"]["word"] == "");
}

TEST_CASE("count: empty class for n >= 5") {
  const auto r = run("count --n 5 --avoid 123,321 --pattern 213");
  REQUIRE(r.exit_code == 0);
  const json out = r.parsed();
  CHECK(out["value"] == "0");
  CHECK(out["canonical"]["class"] == "D6");
}

TEST_CASE("count: all methods agree on a shared key") {
  for (const char* method : {"formula", "structural", "oracle", "sum"}) {
    const auto r = run(std::string("count --n 7 --avoid 132,321 "
                                   "--pattern 213 --method ") + method);
    REQUIRE(r.exit_code == 0);
    CHECK(r.parsed()["value"] == "126");  // C(9,5)
  }
}

TEST_CASE("count: symmetry-derived class transports the pattern") {
  // (231,312) is the (132,213) class pushed through a symmetry word.
  const auto oracle =
      run("count --n 7 --avoid 231,312 --pattern 123 --method oracle");
  const auto formula = run("count --n 7 --avoid 231,312 --pattern 123");
  REQUIRE(oracle.exit_code == 0);
  REQUIRE(formula.exit_code == 0);
  const json f = formula.parsed();
  CHECK(f["canonical"]["class"] == "D2");
  CHECK(f["canonical"]["word"] != "");
  CHECK(f["value"] == oracle.parsed()["value"]);
}

TEST_CASE("count: gf method is T1-only") {
  const auto ok =
      run("count --n 8 --avoid 123,132,213 --pattern 321 --method gf");
  REQUIRE(ok.exit_code == 0);
  CHECK(ok.parsed()["value"] == "1478");
  CHECK(run("count --n 8 --avoid 123,132 --pattern 321 --method gf")
            .exit_code == 2);
}

TEST_CASE("gf: named series") {
  const auto r = run("gf --name t1_321 --terms 8");
  REQUIRE(r.exit_code == 0);
  const json out = r.parsed();
  const auto& c = out["coefficients"];
  REQUIRE(c.size() == 9);
  CHECK(c[3] == "1");
  CHECK(c[7] == "545");
  CHECK(c[8] == "1478");
  const auto fib = run("gf --name fib --terms 6");
  REQUIRE(fib.exit_code == 0);
  CHECK(fib.parsed()["coefficients"][6] == "8");
}

TEST_CASE("gf: custom rational function") {
  const auto r = run("gf --name custom --num 0,1 --den 1,-1,-1 --terms 7");
  REQUIRE(r.exit_code == 0);
  CHECK(r.parsed()["coefficients"][7] == "13");  // F_7
  CHECK(run("gf --name custom --num 0,1 --den 0,1 --terms 3").exit_code == 2);
}

TEST_CASE("enumerate: structural and filter agree") {
  const auto s = run("enumerate --n 5 --avoid 132,321");
  const auto f = run("enumerate --n 5 --avoid 132,321 --method filter");
  REQUIRE(s.exit_code == 0);
  REQUIRE(f.exit_code == 0);
  const json sj = s.parsed(), fj = f.parsed();
  CHECK(sj["cardinality"] == "11");  // C(5,2)+1
  CHECK(fj["cardinality"] == "11");
  auto sorted = [](json perms) {
    std::sort(perms.begin(), perms.end());
    return perms;
  };
  CHECK(sorted(sj["permutations"]) == sorted(fj["permutations"]));
}

TEST_CASE("verify: clean run exits 0") {
  const auto r = run("verify --max-n 4");
  REQUIRE(r.exit_code == 0);
  const json out = r.parsed();
  CHECK(out["all_ok"] == true);
  CHECK(out["failures"].empty());
  CHECK(out["entries"].size() == 35 * 2 * 6);
}

TEST_CASE("verify: corrupted coefficient exits 1 and names the cell") {
  const auto r = run("verify --max-n 5 --classes 132,213 "
                     "--corrupt 132,213:123:5:1",
                     /*merge_stderr=*/true);
  CHECK(r.exit_code == 1);
  CHECK(has(r.output, "\"all_ok\": false"));
  CHECK(has(r.output, "S_5(132,213) pattern 123"));
}

TEST_CASE("verify: csv output") {
  const auto r = run("verify --max-n 4 --classes D1 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(has(r.output,
            "avoided;canonical;word;pattern;n;oracle;structural;formula;"
            "comp_sum;ok"));
  CHECK(has(r.output, "123,132;D1;;321;4;13;13;13;;PASS"));
  CHECK(!has(r.output, "FAIL"));
}

TEST_CASE("bijection: worked examples") {
  const auto p1 = run("bijection --name phi1 --input 2,1,4,2");
  REQUIRE(p1.exit_code == 0);
  CHECK(p1.parsed()["result"]["permutation"] ==
        json::array({8, 9, 7, 5, 4, 3, 6, 1, 2}));
  const auto p1i =
      run("bijection --name phi1 --inverse --input 8,9,7,5,4,3,6,1,2");
  REQUIRE(p1i.exit_code == 0);
  CHECK(p1i.parsed()["result"]["composition"] == json::array({2, 1, 4, 2}));
  const auto psi = run("bijection --name psi1 --input 01001010");
  REQUIRE(psi.exit_code == 0);
  CHECK(psi.parsed()["result"]["permutation"] ==
        json::array({9, 7, 8, 6, 4, 5, 2, 3, 1}));
  const auto p5 = run("bijection --name phi5 --input 4,6,8");
  REQUIRE(p5.exit_code == 0);
  CHECK(p5.parsed()["result"]["permutation"] ==
        json::array({3, 4, 5, 6, 1, 2, 7, 8}));
}

TEST_CASE("bijection: structural swap and tree surgery") {
  const auto swap = run("bijection --name swap --class T2 "
                        "--input 7,5,4,3,2,1,6 --occ 4,5,7 --from 213 --to 312");
  REQUIRE(swap.exit_code == 0);
  CHECK(swap.parsed()["result"]["permutation"] ==
        json::array({7, 6, 5, 4, 2, 1, 3}));
  const auto rho = run("bijection --name rho --input 2,1,3 --occ 1,2,3");
  REQUIRE(rho.exit_code == 0);
  CHECK(rho.parsed()["result"]["permutation"] == json::array({1, 2, 3}));
  const auto dot =
      run("bijection --name rho --input 2,1,3 --occ 1,2,3 --dot");
  REQUIRE(dot.exit_code == 0);
  CHECK(has(dot.parsed()["result"]["dot"].get<std::string>(), "digraph"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("count --n 5 --avoid 123 --pattern 321").exit_code == 2);
  CHECK(run("count --n 5 --avoid 123,145 --pattern 321").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("count --n 5 --avoid 123,132").exit_code == 2);  // missing flag
  CHECK(run("enumerate --n 12 --avoid 123,132 --method filter").exit_code == 2);
  CHECK(run("bijection --name phi9 --input 1,2").exit_code == 2);
  CHECK(run("verify --max-n 4 --format yaml").exit_code == 2);
}
