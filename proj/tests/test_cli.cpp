#include "dihedral/cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace dihedral;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dihedral-verify");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("dihedral_test_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("verify") {
  SUBCASE("n = 1") {
    const Run r = run({"verify", "--n", "1"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "group order:  8"));
    CHECK(contains(r.out, "theorem verified: yes"));
  }
  SUBCASE("n = 5") {
    const Run r = run({"verify", "--n", "5"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "dimension 11"));
    CHECK(contains(r.out, "group order:  40"));
  }
  SUBCASE("usage errors") {
    CHECK(run({"verify", "--n", "0"}).code == kExitUsage);
    CHECK(run({"verify", "--n", "-2"}).code == kExitUsage);
    CHECK(run({"verify", "--n", "abc"}).code == kExitUsage);
    CHECK(run({"verify"}).code == kExitUsage);
    CHECK(run({"verify", "--range", "-1"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
  }
  SUBCASE("a closure cap below the group order fails verification") {
    const Run r = run({"verify", "--n", "2", "--closure-cap", "8"});
    CHECK(r.code == kExitVerificationFailed);
    CHECK(contains(r.out, "closure exceeds cap 8"));
  }
  SUBCASE("oracle") {
    const Run r = run({"verify", "--n", "1", "--oracle", "4"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "oracle (D = 4): agrees"));
    CHECK(run({"verify", "--n", "2", "--oracle", "16"}).code == kExitBudget);
  }
}

TEST_CASE("corollary") {
  const Run k6 = run({"corollary", "--k", "6"});
  CHECK(k6.code == kExitOk);
  CHECK(contains(k6.out, "ambient dimension: 7"));
  CHECK(contains(k6.out, "subgroup order:    12"));
  const Run k4 = run({"corollary", "--k", "4"});
  CHECK(k4.code == kExitOk);
  CHECK(contains(k4.out, "ambient dimension: 3"));
  const Run k1 = run({"corollary", "--k", "1"});
  CHECK(k1.code == kExitOk);
  CHECK(contains(k1.out, "subgroup order:    2"));
  CHECK(run({"corollary", "--k", "0"}).code == kExitUsage);
  CHECK(run({"corollary"}).code == kExitUsage);
}

TEST_CASE("element") {
  SUBCASE("s s") {
    const Run r = run({"element", "--n", "1", "--word", "s s"});
    REQUIRE(r.code == kExitOk);
    const auto cover = r.out.find("A' = ");
    REQUIRE(cover != std::string::npos);
    const std::string a_view = r.out.substr(0, cover);
    const std::string cover_view = r.out.substr(cover);
    CHECK(contains(a_view, "translation: (0/1, 0/1, 0/1, 0/1, 0/1, 0/1)"));
    CHECK(contains(a_view, "order: 1"));
    CHECK(contains(cover_view, "translation: (1/2, 0/1, 1/2, 0/1, 0/1, 0/1)"));
    CHECK(contains(cover_view, "translation element: yes"));
    CHECK(contains(cover_view, "order: 2"));
  }
  SUBCASE("r s") {
    const Run r = run({"element", "--n", "1", "--word", "r s", "--oracle", "8"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "order: 2"));
    CHECK(contains(r.out, "fixed point: no"));
    CHECK(contains(r.out, "agrees"));
  }
  SUBCASE("identity") {
    const Run r = run({"element", "--n", "2", "--word", ""});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "order: 1"));
    CHECK(contains(r.out, "fixed point: yes"));
  }
  SUBCASE("errors") {
    const Run bad = run({"element", "--n", "1", "--word", "rs"});
    CHECK(bad.code == kExitUsage);
    CHECK(contains(bad.err, "position 1"));
    CHECK(run({"element", "--n", "0", "--word", "r"}).code == kExitUsage);
    CHECK(run({"element", "--n", "1", "--word", "r^2", "--oracle", "16", "--oracle-budget", "100"}).code ==
          kExitBudget);
  }
}

TEST_CASE("verify JSON certificate") {
  const fs::path path = temp_file("verify.json");
  REQUIRE(run({"verify", "--n", "1", "--json", path.string()}).code == kExitOk);
  const std::string text = slurp(path);
  const auto doc = nlohmann::ordered_json::parse(text);
  CHECK(keys(doc) == std::vector<std::string>{"schema_version", "command", "params", "dimension", "group_order",
                                              "elements", "steps", "details", "theorem_verified", "elapsed_ms"});
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["command"] == "verify");
  CHECK(doc["params"]["n"] == 1);
  CHECK(doc["dimension"] == 3);
  CHECK(doc["group_order"] == 8);
  CHECK(doc["theorem_verified"] == true);
  CHECK(doc["elapsed_ms"].is_null());
  REQUIRE(doc["elements"].size() == 8);
  for (const auto& e : doc["elements"])
    CHECK(keys(e) == std::vector<std::string>{"word", "order", "is_translation", "has_fixed_point"});
  CHECK(doc["elements"][0]["word"] == "");
  CHECK(doc["elements"][0]["has_fixed_point"] == true);
  for (std::size_t i = 1; i < 8; ++i) CHECK(doc["elements"][i]["has_fixed_point"] == false);
  CHECK(keys(doc["steps"]) == std::vector<std::string>{"step1", "step2", "step3", "step4", "step5"});
  for (const auto& [name, passed] : doc["steps"].items()) CHECK(passed == true);

  // Deterministic output, and --timing fills elapsed_ms.
  const fs::path again = temp_file("verify_again.json");
  REQUIRE(run({"verify", "--n", "1", "--json", again.string()}).code == kExitOk);
  CHECK(slurp(again) == text);
  REQUIRE(run({"verify", "--n", "1", "--json", again.string(), "--timing"}).code == kExitOk);
  CHECK(nlohmann::ordered_json::parse(slurp(again))["elapsed_ms"].is_number());

  fs::remove(path);
  fs::remove(again);
}

TEST_CASE("range and corollary documents") {
  const fs::path range = temp_file("range.json");
  REQUIRE(run({"verify", "--range", "3", "--json", range.string()}).code == kExitOk);
  const auto doc = nlohmann::ordered_json::parse(slurp(range));
  CHECK(doc["params"]["range"] == 3);
  REQUIRE(doc["runs"].size() == 3);
  for (int n = 1; n <= 3; ++n) CHECK(doc["runs"][n - 1]["group_order"] == 8 * n);
  CHECK(doc["theorem_verified"] == true);

  const fs::path corollary = temp_file("corollary.json");
  REQUIRE(run({"corollary", "--k", "6", "--json", corollary.string()}).code == kExitOk);
  const auto cdoc = nlohmann::ordered_json::parse(slurp(corollary));
  CHECK(cdoc["command"] == "corollary");
  CHECK(cdoc["params"]["k"] == 6);
  CHECK(cdoc["dimension"] == 7);
  CHECK(cdoc["group_order"] == 12);
  CHECK(cdoc["corollary_verified"] == true);

  CHECK(run({"verify", "--n", "1", "--json", "/nonexistent-dir/x.json"}).code == kExitUsage);
  fs::remove(range);
  fs::remove(corollary);
}
