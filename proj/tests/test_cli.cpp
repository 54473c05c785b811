#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fusionlab/cli.hpp"

using namespace fusionlab::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json strip_timing(nlohmann::json j) {
  for (auto& s : j["sections"]) s.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("verify at p = 3") {
  auto rep = cmd_verify({3, false, 1, 338});
  CHECK(rep.pass());
  REQUIRE(rep.sections.size() == 7);
  const std::vector<std::string> names{"groups",        "pointed_modcats", "census",           "pentagon",
                                       "t_permutation", "verdict",         "dimension_profile"};
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(rep.sections[i].name == names[i]);
    CHECK(rep.sections[i].status == "pass");
  }
  auto j = rep.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["overall"] == "pass");
  CHECK(j["sections"][3]["payload"]["violations"] == 0);
  CHECK(j["sections"][5]["payload"]["pentagon_violations"] == 0);
  CHECK(j["sections"][5]["payload"]["group_theoretical"] == false);
}

TEST_CASE("skipped pentagon and negative tau") {
  auto rep = cmd_verify({5, true, -1, 338});
  CHECK(rep.pass());
  int skipped = 0;
  for (const auto& s : rep.sections) skipped += s.status == "skipped";
  CHECK(skipped == 1);
  CHECK(rep.to_json()["sections"][5]["payload"]["pentagon_violations"].is_null());

  auto neg = cmd_verify({3, false, -1, 338});
  CHECK(neg.pass());
}

TEST_CASE("reports are deterministic") {
  const std::string a = "/tmp/fusionlab_cli_a.json", b = "/tmp/fusionlab_cli_b.json";
  CHECK(run({"verify", "--p", "3", "--out", a, "--json-only"}).code == 0);
  CHECK(run({"verify", "--p", "3", "--out", b, "--json-only"}).code == 0);
  std::ifstream fa(a), fb(b);
  auto ja = nlohmann::json::parse(fa), jb = nlohmann::json::parse(fb);
  CHECK(strip_timing(ja).dump() == strip_timing(jb).dump());
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "--p", "4"}).code == kUsage);
  CHECK(run({"verify", "--p", "2"}).code == kUsage);
  CHECK(run({"verify", "--p", "17"}).code == kUsage);
  CHECK(run({"verify", "--p", "5", "--max-group-order", "40"}).code == kUsage);
  CHECK_NOTHROW(check_prime(17, 600));
  CHECK(run({"verify"}).code == kUsage);
  CHECK(run({}).code == kUsage);
  CHECK(run({"pentagon", "--p", "3", "--tau-sign", "x"}).code == kUsage);
  CHECK(run({"rank", "--group", "Q8", "--d1", "e", "--d2", "e"}).code == kUsage);
  CHECK(run({"rank", "--group", "D6xZ3", "--d1", "(q,0)", "--d2", "e"}).code == kUsage);
  CHECK(run({"--help"}).code == kPass);

  auto r = run({"verify", "--p", "3"});
  CHECK(r.code == kPass);
  CHECK(r.out.find("overall: PASS") != std::string::npos);
}

TEST_CASE("thin wrappers") {
  CHECK(cmd_pentagon(3, 1)["violations"] == 0);
  CHECK(cmd_pentagon(3, -1)["violations"] == 0);
  CHECK(cmd_profile(3)["dimension_profile"] == nlohmann::json::parse("[[1,6],[2,3],[3,2]]"));
  auto m = cmd_modcats(3);
  CHECK(m["ranks"] == nlohmann::json::parse("[6,6,2,2]"));
  CHECK(m["descriptors"].size() == 4);

  auto rk = cmd_rank("D6xZ3", "(r1,1)", "(r1,1)");
  CHECK(rk["rank"] == 10);
  CHECK(cmd_rank("D6xZ3", "e", "(r1,1)")["rank"] == 6);
  CHECK(cmd_rank("D6xZ3", "(r1,0) (r0,1) mu=1", "(r1,0) (r0,1)")["rank"] == 2);
  CHECK(cmd_rank("D6xZ3", "(r1,0) (r0,1)", "(r1,0) (r0,1)")["rank"] == 18);

  auto out = run({"profile", "--p", "5", "--json-only"});
  CHECK(out.code == 0);
  CHECK(nlohmann::json::parse(out.out)["dimension_profile"] == nlohmann::json::parse("[[1,10],[2,10],[5,2]]"));
  CHECK(nlohmann::json::parse(run({"pentagon", "--p", "3", "--tau-sign", "-"}).out)["tau_sign"] == "-");
}
