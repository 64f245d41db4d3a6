#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "pogp/cli.hpp"
#include "pogp/gf.hpp"

using namespace pogp;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const cli::Hooks* hooks = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count command") {
  auto r = run_cli({"count", "-p", "1-1'2'", "-k", "2", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");

  r = run_cli({"count", "-p", "12", "-k", "2", "-n", "2", "--quasi"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  r = run_cli({"count", "-p", "1'-2-1''", "--order", "shuffle", "-k", "2", "-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "7\n");

  r = run_cli({"count", "-p", "1-1'", "--order", "explicit", "--rel", "1'<1", "-k", "2", "-n",
               "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("series command") {
  auto r = run_cli({"series", "-p", "12", "-k", "2", "-N", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,2,3,4,5\n");
  CHECK(r.err.empty());

  r = run_cli({"series", "-p", "12", "-k", "0", "-N", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,0,0\n");

  auto oracle = run_cli({"series", "-p", "12", "-k", "2", "-N", "4", "--engine", "oracle"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out == "1,2,3,4,5\n");
}

TEST_CASE("series falls back to the oracle when no closed form applies") {
  auto r = run_cli({"series", "-p", "132", "-k", "2", "-N", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,2,4,8,16,32\n");
  CHECK(r.err.find("no closed form") != std::string::npos);
}

TEST_CASE("expand command lists the expansion") {
  auto r = run_cli({"expand", "-p", "1'2'-3-1''", "--order", "shuffle"});
  CHECK(r.code == 0);
  CHECK(r.out == "12-3-1\n12-3-2\n12-4-3\n13-4-2\n23-4-1\n");
}

TEST_CASE("equiv command") {
  auto r = run_cli({"equiv", "-p", "12-1'2'", "-q", "1'2'-12", "-K", "2", "-N", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("equivalent within budget") != std::string::npos);

  r = run_cli({"equiv", "-p", "12", "-q", "123", "-K", "2", "-N", "3"});
  CHECK(r.code == 2);
  CHECK(r.out.find("counterexample: k=2 n=2") != std::string::npos);
  CHECK(r.out.find("k=1: agree") != std::string::npos);
  CHECK(r.out.find("k=2: differ") != std::string::npos);
}

TEST_CASE("mnd command agrees between engines") {
  auto oracle = run_cli({"mnd", "-p", "21", "-k", "2", "-n", "2"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out == "0  3\n1  1\n");

  auto gf = run_cli({"mnd", "-p", "21", "-k", "2", "-n", "2", "--gf"});
  CHECK(gf.code == 0);
  CHECK(gf.out == oracle.out);

  auto wide = run_cli({"mnd", "-p", "122", "-k", "3", "-n", "6", "--gf"});
  auto wide_oracle = run_cli({"mnd", "-p", "122", "-k", "3", "-n", "6"});
  CHECK(wide.code == 0);
  CHECK(wide.out == wide_oracle.out);
}

TEST_CASE("verify command") {
  auto r = run_cli({"verify", "-K", "2", "-N", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  for (const char* name : {"eq1", "registry", "quasi", "multi", "shuffle", "mnd", "expand",
                           "equiv"})
    CHECK(r.out.find(name) != std::string::npos);

  r = run_cli({"verify", "--only", "eq1", "-K", "5", "-N", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eq1") != std::string::npos);
  CHECK(r.out.find("registry") == std::string::npos);

  r = run_cli({"verify", "--only", "eq1,quasi", "-K", "2", "-N", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("quasi") != std::string::npos);
}

TEST_CASE("verify reports an injected registry corruption") {
  cli::Hooks hooks;
  hooks.registry_override = [](std::string_view name, int k, int order) {
    Series s = gf::registry_series(name, k, order);
    if (name == "122" && k == 2 && order >= 3) s.set_coeff(3, s.coeff(3) + 1);
    return s;
  };
  auto r = run_cli({"verify", "-K", "2", "-N", "4"}, &hooks);
  CHECK(r.code == 2);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("122") != std::string::npos);
  CHECK(r.out.find("verification FAILED") != std::string::npos);

  auto clean = run_cli({"verify", "-K", "2", "-N", "4"}, &hooks);
  CHECK(clean.code == 2);

  r = run_cli({"verify", "--only", "eq1", "-K", "2", "-N", "4"}, &hooks);
  CHECK(r.code == 0);  // eq1 does not touch the registry
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"nosuchcommand"}).code == 1);
  CHECK(run_cli({"count", "-p", "12"}).code == 1);  // missing -k/-n
  CHECK(run_cli({"count", "-p", "bogus(", "-k", "2", "-n", "2"}).code == 1);
  CHECK(run_cli({"count", "-p", "12", "-k", "2", "-n", "2", "--format", "xml"}).code == 1);
  CHECK(run_cli({"count", "-p", "1-1'", "--rel", "1'<1", "-k", "2", "-n", "2"}).code == 1);
  CHECK(run_cli({"count", "-p", "1-1'", "--order", "explicit", "--rel", "oops", "-k", "2", "-n",
                 "2"})
            .code == 1);
  CHECK(run_cli({"mnd", "-p", "2-1", "-k", "2", "-n", "3"}).code == 1);
  CHECK(run_cli({"verify", "--only", "bogus"}).code == 1);
}

TEST_CASE("a totally ordered pattern expands to itself") {
  auto r = run_cli({"expand", "-p", "123"});
  CHECK(r.code == 0);
  CHECK(r.out == "123\n");
}

TEST_CASE("budget exhaustion exits with 3") {
  auto r = run_cli({"count", "-p", "12", "-k", "3", "-n", "10", "--cap", "50"});
  CHECK(r.code == 3);
  CHECK(r.err.find("budget") != std::string::npos);

  CHECK(run_cli({"equiv", "-p", "12", "-q", "21", "-K", "3", "-N", "10", "--cap", "50"}).code ==
        3);

  setenv("POGP_ENUM_CAP", "50", 1);
  CHECK(run_cli({"count", "-p", "12", "-k", "3", "-n", "10"}).code == 3);
  unsetenv("POGP_ENUM_CAP");
  CHECK(run_cli({"count", "-p", "12", "-k", "3", "-n", "10"}).code == 0);
}

TEST_CASE("help exits with 0") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count") != std::string::npos);
  CHECK(run_cli({"count", "--help"}).code == 0);
}

TEST_CASE("json output parses and round-trips byte for byte") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"count", "-p", "1-1'2'", "-k", "2", "-n", "2", "--format", "json"},
           {"series", "-p", "12", "-k", "2", "-N", "4", "--format", "json"},
           {"expand", "-p", "1'2'-3-1''", "--order", "shuffle", "--format", "json"},
           {"mnd", "-p", "21", "-k", "2", "-n", "3", "--format", "json"},
           {"verify", "-K", "1", "-N", "3", "--format", "json"},
       }) {
    auto r = run_cli(args);
    CHECK(r.code == 0);
    auto parsed = nlohmann::ordered_json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }

  auto r = run_cli({"equiv", "-p", "12", "-q", "123", "-K", "2", "-N", "3", "--format", "json"});
  CHECK(r.code == 2);
  auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed["equivalent"] == false);
  CHECK(parsed["counterexample"]["k"] == 2);
  CHECK(parsed["counterexample"]["left"] == "3");
  CHECK(parsed["per_alphabet"] == nlohmann::ordered_json::array({true, false}));
}

TEST_CASE("json counts are decimal strings") {
  auto r = run_cli({"count", "-p", "12", "-k", "9", "-n", "0", "--format", "json"});
  auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed["count"].is_string());
  CHECK(parsed["count"] == "1");

  r = run_cli({"series", "-p", "12", "-k", "3", "-N", "3", "--format", "json"});
  parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed["coefficients"][3] == "10");
}

TEST_CASE("csv output carries a header row") {
  auto r = run_cli({"count", "-p", "1-1'2'", "-k", "2", "-n", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "pattern,order,k,n,quasi,count\n1-1'2',incomparable,2,2,false,4\n");

  r = run_cli({"series", "-p", "12", "-k", "2", "-N", "2", "--format", "csv"});
  CHECK(r.out == "n,coefficient\n0,1\n1,2\n2,3\n");

  r = run_cli({"equiv", "-p", "12", "-q", "123", "-K", "2", "-N", "3", "--format", "csv"});
  CHECK(r.code == 2);
  CHECK(r.out == "k,agree\n1,true\n2,false\n");
}
