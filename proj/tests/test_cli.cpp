#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "gemforge/cli.hpp"
#include "gemforge/survey.hpp"

using namespace gemforge;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gemforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("gem-check") {
  const Run r = run({"gem-check", "5", "3", "2", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "gem: true (parametric), true (direct)\n");
  CHECK(run({"gem-check", "4", "3", "1", "2"}).out == "gem: false (parametric), false (direct)\n");
}

TEST_CASE("build and census") {
  const Json tiny = run_json({"build", "1", "1", "0", "0"});
  CHECK(tiny["vertices"] == 2);
  CHECK(tiny["involutions"][0] == Json::array({1, 0}));

  const Json c = run_json({"census", "3", "4", "1", "1"});
  CHECK(c["census"]["{0,1}"] == Json::array({6, 6, 4, 4, 4}));
  CHECK(c["census"]["{1,3}"] == Json::array({4, 4, 4, 4, 4, 4}));
  CHECK(c["match"] == true);
}

TEST_CASE("iso") {
  const Json a = run_json({"iso", "5", "8", "3", "2", "5", "8", "3", "3"});
  CHECK(a["brute_force"]["isomorphic"] == true);
  CHECK(a["theorem1"]["isomorphic"] == true);

  const Json b = run_json({"iso", "3", "4", "1", "1", "3", "4", "1", "2"});
  CHECK(b["brute_force"]["isomorphic"] == false);
  CHECK(b["theorem1"]["isomorphic"] == false);

  const Json c = run_json({"iso", "3", "4", "1", "1", "3", "4", "1", "1"});
  CHECK(c["brute_force"]["witness"]["phi"] == Json::array({0, 1, 2, 3}));
  const Json f = c["brute_force"]["witness"]["f"];
  for (size_t v = 0; v < f.size(); ++v) CHECK(f[v] == v);

  // Outside the classifier's scope the brute-force verdict still stands.
  const Json d = run_json({"iso", "2", "5", "1", "1", "5", "2", "1", "1"});
  CHECK(d["brute_force"]["isomorphic"] == true);
  CHECK(d["theorem1"].contains("error"));
}

TEST_CASE("classify, homology, covering") {
  CHECK(run({"classify", "5", "8", "3", "2", "5", "8", "3", "3"}).out.find("isomorphic [A-double-prime") !=
        std::string::npos);
  CHECK(run_json({"classify", "--corollary", "5", "8", "3"})["classes"].size() == 2);
  CHECK(run({"homology", "3", "4", "1", "1"}).out == "H1(G(3,4,1,1)) = Z_2 + Z_6\n");
  CHECK(run_json({"homology", "3", "4", "5", "1", "--tree", "dfs"})["h1"] ==
        Json::parse(R"({"rank":0,"torsion":[3]})"));
  const Json cov = run_json({"covering", "5", "8", "3", "2", "--compare", "3"});
  CHECK(cov["covering"]["description"] == "M_{5,3}(8,3)");
  CHECK(cov["compare"]["theorem3"] == true);
  CHECK(cov["compare"]["theorem2"] == true);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"build", "3", "4"}).code == kExitUsage);
  CHECK(run({"build", "0", "4", "1", "1"}).code == kExitUsage);
  CHECK(run({"homology", "4", "3", "1", "2"}).code == kExitUsage);
  CHECK(run({"census", "3", "4", "1", "1", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("survey") {
  const Run empty = run({"survey", "0", "0", "--format", "json"});
  CHECK(empty.code == 0);
  const Json e = Json::parse(empty.out);
  CHECK(e["tuples"].empty());
  CHECK(e["pairs"].empty());
  CHECK(e["discrepancies"].empty());

  CHECK(run({"survey", "9", "3"}).code == kExitUsage);
  CHECK(run({"survey", "--max-n", "3", "--max-p", "-1"}).code == 0);

  const Json s = run_json({"survey", "--max-n", "4", "--max-p", "4"});
  std::vector<std::string> keys;
  for (auto it = s.begin(); it != s.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"range", "tuples", "pairs", "discrepancies",
                                         "theorem3_consistency", "conjecture_evidence"});
  CHECK(s["discrepancies"].empty());
  bool flagged = false;
  for (const auto& p : s["pairs"])
    if (p["a"] == Json::array({3, 4, 1, 1}) && p["b"] == Json::array({3, 4, 5, 1}))
      flagged = p["prior_literature_mismatch"] == true;
  CHECK(flagged);
}

TEST_CASE("survey ceiling from the environment") {
  setenv("GEMFORGE_CEILING", "3", 1);
  CHECK(run({"survey", "4", "3"}).code == kExitUsage);
  CHECK(run({"survey", "3", "3"}).code == kExitOk);
  setenv("GEMFORGE_CEILING", "x", 1);
  CHECK(run({"survey", "3", "3"}).code == kExitUsage);
  unsetenv("GEMFORGE_CEILING");
}

TEST_CASE("survey is independent of the thread count") {
  const std::string one = to_json(run_survey({5, 5}, 1)).dump();
  const std::string many = to_json(run_survey({5, 5}, 4)).dump();
  CHECK(one == many);
}

TEST_CASE("discrepancy list is empty iff every pair agrees") {
  const SurveyReport r = run_survey({6, 6});
  bool all_agree = true;
  for (const auto& p : r.pairs) all_agree = all_agree && p.agree;
  CHECK(all_agree == r.discrepancies.empty());
  CHECK(classifiable_tuples(3, 5).size() == 8);
}
