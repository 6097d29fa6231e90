#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "symspace/cli.hpp"

using namespace symspace;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = SYMSPACE_TEST_DATA;

}  // namespace

TEST_CASE("catalog list matches the golden file") {
  const Run r = run({"catalog", "list"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == slurp(kData + "/golden/catalog_list.txt"));
  CHECK(r.out == catalog_listing());
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 54);
  const Run j = run({"catalog", "list", "--json"});
  CHECK(json::parse(j.out).size() == 54);
}

TEST_CASE("catalog show") {
  const Run r = run({"catalog", "show", "3", "--n", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("★") != std::string::npos);
  CHECK(r.out.find("∪_{p=0}^{2} GL(2,R)/O(p,2-p)") != std::string::npos);
  const json j = json::parse(run({"catalog", "show", "3", "--n", "2", "--json"}).out);
  CHECK(j["star"] == true);
  CHECK(j["union"] == "∪_{p=0}^{n} GL(n,R)/O(p,n-p)");
  CHECK(j["union_instance"] == "∪_{p=0}^{2} GL(2,R)/O(p,2-p)");
  CHECK(j["mu"] == -1);

  const Run bad = run({"catalog", "show", "99"});
  CHECK(bad.code == kExitUsage);
  const json e = json::parse(bad.err);
  CHECK(e["exit_code"] == kExitUsage);
  CHECK(e["error"] == "UnknownEntry");

  CHECK(run({"catalog", "show", "8", "--n", "1"}).code == kExitUsage);
  CHECK(run({"catalog", "frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "8", "--trials", "50", "--json"});
  CHECK(r.code == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["failures"] == 0);
  const json& reports = doc["reports"];
  REQUIRE(reports.is_array());
  CHECK_FALSE(reports.empty());
  for (const auto& rep : reports) {
    CHECK(rep["pass"] == true);
    for (const auto& c : rep["checks"])
      if (c["name"] == "sampled_action") CHECK(c["detail"] == "50 samples");
  }
  const Run bad = run({"verify", "11", "--corrupt", "11", "--json"});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(run({"verify", "abc"}).code == kExitUsage);
}

TEST_CASE("dims") {
  const json j = json::parse(run({"dims", "32", "--n", "2"}).out);
  CHECK(j["dim_G"] == 10);
  CHECK(j["dim_H"] == 4);
  CHECK(j["dim_Gr"] == 6);
}

TEST_CASE("sample is deterministic") {
  const Run a = run({"sample", "11", "--p", "1", "--q", "1", "--seed", "1"});
  const Run b = run({"sample", "11", "--p", "1", "--q", "1", "--seed", "1"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out != run({"sample", "11", "--p", "1", "--q", "1", "--seed", "2"}).out);
  ::setenv("SYMM_SEED", "1", 1);
  CHECK(run({"sample", "11", "--p", "1", "--q", "1"}).out == a.out);
  ::unsetenv("SYMM_SEED");
}

TEST_CASE("double ratio") {
  const Run r = run({"double-ratio", "52", "--p", "1", "--q", "1", "--input", kData + "/fixtures/cross_ratio_52.json"});
  CHECK(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["degree"] == 1);
  CHECK(j["charpoly"] == json::parse(R"([["1"],["-2/5"]])"));

  const Run nt = run({"double-ratio", "52", "--p", "1", "--q", "1", "--input", kData + "/fixtures/not_transverse_52.json"});
  CHECK(nt.code == kExitDegenerate);
  CHECK(json::parse(nt.err)["error"] == "NotTransverse");

  CHECK(run({"double-ratio", "52", "--p", "1", "--q", "1", "--input", kData + "/fixtures/missing.json"}).code == kExitUsage);
  const Run sampled = run({"double-ratio", "21", "--n", "1", "--seed", "3"});
  CHECK((sampled.code == kExitOk || sampled.code == kExitDegenerate));
}
