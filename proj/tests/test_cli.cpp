#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mixcons/report.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mixcons");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = mixcons::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check") {
  Result st = run({"check", "--logic", "st", "p | (q & ~q) => p & (q | ~q)"});
  CHECK(st.code == 0);
  CHECK(st.out == "VALID\n");

  Result ts = run({"check", "--logic", "ts", "p => p"});
  CHECK(ts.code == 1);
  CHECK(ts.out == "INVALID\ncountermodel: p=1/2\n");

  Result lp = run({"check", "--logic", "lp", "--anti", "p => p & q"});
  CHECK(lp.code == 0);
  CHECK(lp.out == "ANTIVALID\n");

  Result st_anti = run({"check", "--logic", "ST", "--anti", "p => p & q"});
  CHECK(st_anti.code == 1);
  CHECK(contains(st_anti.out, "NOT-ANTIVALID"));
}

TEST_CASE("parse errors exit 2 with a column") {
  Result r = run({"check", "p & => q"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(contains(r.err, "column 5"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "--logic", "s4", "p => p"}).code == 2);
  CHECK(run({"oracle", "--samples", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("decompose") {
  Result st = run({"decompose", "--mode", "st-product", "p | (q & ~q) => p & (q | ~q)"});
  CHECK(st.code == 0);
  CHECK(contains(st.out, "MEMBER\nconnector: "));
  CHECK(contains(st.out, "atom-sharing: yes"));
  CHECK(contains(st.out, "check K3: "));
  CHECK(contains(st.out, "check LP: "));

  Result ts = run({"decompose", "--mode", "ts-sum", "p => p"});
  CHECK(ts.code == 1);
  CHECK(contains(ts.out, "NOT-MEMBER\npivot: p0\n"));
  CHECK(contains(ts.out, "LP fails p => p0 at p=1/2 p0=0"));
  CHECK(contains(ts.out, "K3 fails p0 => p at p=1/2 p0=1"));

  Result lambda = run({"decompose", "--mode", "lpk3-product", "T => L"});
  CHECK(lambda.code == 2);
  CHECK(contains(lambda.err, "hint:"));

  Result lpk3 = run({"decompose", "--mode", "lpk3-product", "p => q | T"});
  CHECK(lpk3.code == 0);
  CHECK(contains(lpk3.out, "connector: T"));
}

TEST_CASE("dualize") {
  CHECK(run({"dualize", "--map", "op", "p & (q | ~q)"}).out == "p | q & ~q\n");
  CHECK(run({"dualize", "--map", "op", "p, q => r"}).out == "r => p, q\n");
  CHECK(run({"dualize", "--map", "neg", "p => q"}).out == "~q => ~p\n");
  CHECK(run({"dualize", "--map", "invert", "p => q"}).out == "q => p\n");
  CHECK(run({"dualize", "--map", "invert", "p"}).code == 2);
}

TEST_CASE("interpolate") {
  Result r = run({"interpolate", "p | (q & ~q) => p & (r | ~r)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "connector: p\n"));
  Result taut = run({"interpolate", "p => q | ~q"});
  CHECK(taut.code == 1);
  CHECK(contains(taut.out, "NO-INTERPOLANT"));
  CHECK(run({"interpolate", "p, q => q"}).code == 2);
}

TEST_CASE("truthtable") {
  Result excluded = run({"truthtable", "p | ~p"});
  CHECK(excluded.code == 0);
  CHECK(excluded.out == "p | p | ~p\n0 | 1\n1/2 | 1/2\n1 | 1\n");

  Result lambda = run({"truthtable", "L"});
  CHECK(lambda.out == "| L\n| 1/2\n");

  Result conj = run({"truthtable", "p & q"});
  std::istringstream lines(conj.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  REQUIRE(rows.size() == 10);
  CHECK(rows[2] == "0 1/2 | 0");
  CHECK(rows[6] == "1/2 1 | 1/2");
  CHECK(rows[9] == "1 1 | 1");

  Result wide = run({"truthtable", "a & b & c & d & e & f & g"});
  CHECK(wide.code == 2);
  CHECK(contains(wide.err, "cap of 6"));
  CHECK(run({"truthtable", "--max-vars", "7", "a & b & c & d & e & f & g"}).code == 0);
}

TEST_CASE("json records, one per line") {
  using nlohmann::json;
  Result check = run({"check", "--json", "--logic", "ts", "p => p"});
  const json j = json::parse(check.out);
  CHECK(j["valid"] == false);
  CHECK(j["logic"] == "TS");
  CHECK(j["countermodel"]["p"] == "1/2");

  Result sum = run({"decompose", "--json", "--mode", "ts-sum", "p => p"});
  const json s = json::parse(sum.out);
  CHECK(s["result"]["member"] == false);
  CHECK(s["result"]["pivot"] == "p0");
  CHECK(s["checks"].size() == 2);

  Result table = run({"--json", "truthtable", "p"});
  CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 3);
  for (const char* verb : {"dualize", "interpolate"}) {
    Result r = run({verb, "--json", "p => p | q"});
    CHECK(json::accept(r.out));
  }
}

TEST_CASE("oracle verb") {
  Result ok = run({"oracle", "--max-vars", "2", "--max-depth", "3", "--samples", "50", "--seed", "7"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "properties passed (seed 7)"));

  Result single = run({"oracle", "--samples", "1"});
  CHECK(single.code == 0);
  CHECK(contains(single.out, "(1 checked)"));

  Result broken = run({"oracle", "--samples", "50", "--corrupt-standard"});
  CHECK(broken.code == 1);
  CHECK(contains(broken.out, "FAIL"));
  CHECK(contains(broken.out, "minimized:"));
}

TEST_CASE("oracle seed falls back to the environment") {
  setenv("MIXCONS_SEED", "42", 1);
  Result r = run({"oracle", "--samples", "1"});
  unsetenv("MIXCONS_SEED");
  CHECK(contains(r.out, "(seed 42)"));
}
