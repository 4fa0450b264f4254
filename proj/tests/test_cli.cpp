#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = periodica::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("psi command") {
  auto s3 = run({"psi", "--builtin", "S3", "--q", "2"});
  CHECK(s3.code == 0);
  CHECK(contains(s3.out, "psi: 42\n"));
  CHECK(contains(s3.out, "alpha: 7\n"));

  auto z2 = run({"psi", "--presentation", "< a | a^2 >", "--q", "2", "--format", "json"});
  REQUIRE(z2.code == 0);
  CHECK(nlohmann::json::parse(z2.out)["psi"] == "2");

  auto v4 = run({"psi", "--zd", "2,0;0,2", "--q", "4", "--format", "json"});
  REQUIRE(v4.code == 0);
  CHECK(nlohmann::json::parse(v4.out)["alpha"] == "54");

  auto csv = run({"psi", "--builtin", "S3", "--subgroup", "2", "--format", "csv"});
  CHECK(csv.out == "group,subgroup,q,index,class_size,psi,psi_class,alpha\n\"S3\",0 2,2,3,3,6,18,6\n");

  auto words = run({"psi", "--presentation", "< a, b | a^2, b^3, (a b)^2 >", "--subgroup", "a", "--q", "3",
                    "--format", "json"});
  CHECK(nlohmann::json::parse(words.out)["psi"] == "24");
}

TEST_CASE("group files") {
  auto cayley = temp_file("periodica_z3.txt", "3\n0 1 2\n1 2 0\n2 0 1\n");
  auto r = run({"psi", "--cayley", cayley, "--q", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["alpha"] == "8");
  CHECK(nlohmann::json::parse(r.out)["group"] == "periodica_z3");

  auto perms = temp_file("periodica_s3.txt", "(0 1)\n(0 1 2)\n");
  auto s3 = run({"psi", "--perms", perms, "--q", "3", "--format", "json"});
  REQUIRE(s3.code == 0);
  CHECK(nlohmann::json::parse(s3.out)["alpha"] == "108");

  auto bad = temp_file("periodica_bad.txt", "2\n0 1\n1 1\n");
  CHECK(run({"psi", "--cayley", bad}).code == 2);
  CHECK(run({"psi", "--cayley", "/nonexistent/periodica"}).code == 2);
}

TEST_CASE("alpha and aut commands") {
  auto a = run({"alpha", "--builtin", "Z4", "--q", "2"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "orbits: 6\n"));
  auto aut = run({"aut", "--builtin", "Z2", "--q", "2", "--format", "json"});
  REQUIRE(aut.code == 0);
  auto j = nlohmann::json::parse(aut.out);
  CHECK(j["factors"].size() == 2);
  CHECK(j["factors"][0]["quotient"] == "Z2");
  CHECK(j["factors"][1]["alpha"] == "2");
  CHECK(run({"aut", "--presentation", "< a | a^3 >", "--q", "2"}).code == 0);
  CHECK(run({"aut", "--presentation", "< a | a^4 ; H = a^2 >"}).code == 2);
}

TEST_CASE("table command matches the golden file") {
  auto golden = slurp(std::string(PERIODICA_SOURCE_DIR) + "/tests/golden/small_values.csv");
  REQUIRE_FALSE(golden.empty());
  auto t = run({"table"});
  CHECK(t.code == 0);
  CHECK(t.out == golden);

  auto narrow = run({"table", "--q-max", "3"});
  CHECK(contains(narrow.out, "group,q2,q3\n"));
  CHECK(contains(narrow.out, "S3,7,108\n"));

  auto j = nlohmann::json::parse(run({"table", "--format", "json"}).out);
  CHECK(j.size() == 8);
  CHECK(j[5]["group"] == "S3");
  CHECK(j[5]["alpha"]["q4"] == "650");
}

TEST_CASE("classify command") {
  auto c = run({"classify"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "alpha = 3: (G/H = Z2, q = 3), (G/H = Z4, q = 2)\n"));
  CHECK(contains(c.out, "alpha = 4: unattained\n"));
  CHECK(contains(c.out, "alpha = 10: (G/H = Z2, q = 5)\n"));
  auto j = nlohmann::json::parse(run({"classify", "--format", "json"}).out);
  CHECK(j["values"][6]["attained_by"][0]["group"] == "S3");

  auto wide = run({"classify", "--alpha-max", "20"});
  CHECK(wide.code == 3);
  CHECK(contains(wide.err, "warning"));
  CHECK(wide.out.empty());
}

TEST_CASE("necklaces command") {
  auto two = run({"necklaces", "--n", "2", "--q", "2", "--list"});
  CHECK(two.out == "aperiodic necklaces (Lyndon words) of length 2 over 2 letters: 1\n01\n");
  CHECK(contains(run({"necklaces", "--n", "6", "--q", "2"}).out, ": 9\n"));
  CHECK(contains(run({"necklaces", "--n", "1", "--q", "11"}).out, ": 11\n"));
  auto j = nlohmann::json::parse(run({"necklaces", "--n", "8", "--q", "3", "--list", "--format", "json"}).out);
  CHECK(j["aperiodic_necklaces"] == "810");
  CHECK(j["lyndon_words"].size() == 810);
  CHECK(run({"necklaces", "--n", "65"}).code == 2);
  CHECK(run({"--budget", "10", "necklaces", "--n", "4", "--list"}).code == 3);
}

TEST_CASE("lowindex command") {
  auto r = run({"lowindex", "--presentation", "< a, b | >", "--max-index", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "subgroups of index 3: 13\n"));
  auto z2 = run({"lowindex", "--presentation", "< a, b | [a,b] >", "--max-index", "4"});
  CHECK(contains(z2.out, "subgroups of index 4: 7\n"));
  CHECK(run({"lowindex", "--presentation", "< a | >", "--max-index", "13"}).code == 3);
}

TEST_CASE("verify command") {
  auto z6 = run({"verify", "--builtin", "Z6", "--q", "2"});
  CHECK(z6.code == 0);
  CHECK(contains(z6.out, "PASS Z6 inversion"));
  CHECK(contains(z6.out, "all checks passed\n"));
  CHECK_FALSE(contains(z6.out, "FAIL"));

  auto burnside = run({"verify", "--builtin", "S3", "--q", "2", "--check", "burnside"});
  CHECK(burnside.out == "PASS S3 burnside (1 cases)\nall checks passed\n");

  auto all = run({"verify", "--all-builtin", "--q", "2..3"});
  CHECK(all.code == 0);
  CHECK_FALSE(contains(all.out, "FAIL"));

  // budget too small: enumeration checks are skipped, not failed
  auto tight = run({"--budget", "4", "verify", "--builtin", "S4", "--q", "2", "--check", "census"});
  CHECK(tight.code == 0);
  CHECK(contains(tight.out, "SKIP S4 census"));
}

TEST_CASE("exit codes") {
  CHECK(run({"psi", "--builtin", "S3", "--q", "1"}).code == 2);
  CHECK(run({"psi", "--builtin", "Nope"}).code == 2);
  CHECK(run({"psi", "--presentation", "< a | b >"}).code == 2);
  CHECK(run({"psi", "--zd", "1,2;2,4"}).code == 2);
  CHECK(run({"psi", "--zd", "2000,0;0,1"}).code == 3);
  CHECK(run({"psi", "--presentation", "< a, b | [a,b] >", "--max-cosets", "100"}).code == 4);
  CHECK(run({"psi"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"psi", "--builtin", "S3", "--zd", "2"}).code == 2);
  CHECK(run({"psi", "--zd", "2", "--subgroup", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  auto inconclusive = run({"psi", "--presentation", "< a | >"});
  CHECK(inconclusive.code == 4);
  CHECK(inconclusive.out.empty());
  CHECK(contains(inconclusive.err, "did not close"));
}

TEST_CASE("output is deterministic and independent of jobs") {
  const std::vector<std::vector<std::string>> commands = {
      {"psi", "--builtin", "S4", "--q", "3", "--format", "json"},
      {"alpha", "--builtin", "D4", "--q", "2"},
      {"classify", "--format", "json"},
      {"table"},
      {"lowindex", "--presentation", "< a, b | a^2, b^3 >", "--max-index", "6", "--format", "json"},
      {"verify", "--builtin", "Q8", "--q", "2..3"},
  };
  for (const auto& cmd : commands) {
    auto first = run(cmd);
    CHECK(first.code == 0);
    CHECK(run(cmd).out == first.out);
    auto parallel = cmd;
    parallel.insert(parallel.begin(), {"--jobs", "4"});
    CHECK(run(parallel).out == first.out);
  }
}
