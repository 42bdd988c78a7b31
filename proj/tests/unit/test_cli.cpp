#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "polyzeta/cli/commands.hpp"

using namespace polyzeta;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(POLYZETA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("gen documents") {
  const auto j = gen_document(Family::Xi, 1);
  CHECK(j["coefficients"].size() == 1);
  CHECK(j["coefficients"][0]["num"] == "1");
  CHECK(j["coefficients"][0]["den"] == "4");
  CHECK(j["degree"] == 0);
  CHECK(j["leading"] == "1/4");
  const auto j2 = gen_document(Family::Lambda, 2);
  CHECK(j2["value_at_1"] == "-1/93");
  CHECK(j2["coefficients"][1]["num"] == "-1");
  CHECK(gen_csv(Family::Lambda, 1) == "t,num,den\n0,1,7\n");
  CHECK_THROWS_AS(gen_document(Family::Xi, 0), UsageError);
  CHECK_THROWS_AS(gen_csv(Family::Xi, 65), UsageError);
}

TEST_CASE("verify documents") {
  const ReportDocument s = verify_document("structural", 4, 30, false);
  CHECK_FALSE(s.any_fail());
  CHECK(s.suites.size() == 4);
  const ReportDocument a = verify_document("all", 2, 20, false);
  CHECK_FALSE(a.any_fail());
  const auto j = a.to_json();
  CHECK(j["meta"]["tool_version"] == std::string(kToolVersion));
  CHECK(j["meta"]["summary"]["fail"] == 0);
  CHECK_FALSE(j["meta"].contains("timestamp"));
  CHECK_THROWS_AS(verify_document("integral", 7, 30, false), UsageError);
  CHECK_THROWS_AS(verify_document("roots", 11, 30, false), UsageError);
  CHECK_THROWS_AS(verify_document("structural", 13, 30, false), UsageError);
  CHECK_THROWS_AS(verify_document("bogus", 2, 30, false), UsageError);
  CHECK_THROWS_AS(verify_document("structural", 2, 0, false), UsageError);
  CHECK_FALSE(verify_document("structural", 13, 30, true).any_fail());
}

TEST_CASE("roots documents") {
  const ReportDocument r2 = roots_document(Family::Lambda, 2, 80, false);
  const auto& iso = r2.suites[0].checks[0];
  CHECK(iso.status == Status::Pass);
  CHECK(iso.data["intervals"].size() == 1);
  const ReportDocument r1 = roots_document(Family::Xi, 1, 80, false);
  CHECK(r1.suites[0].checks[0].status == Status::Info);
  CHECK(r1.suites[0].checks[0].data["intervals"].empty());
  const ReportDocument r10 = roots_document(Family::Lambda, 10, 80, false);
  const auto& ivs = r10.suites[0].checks[0].data["intervals"];
  CHECK(ivs.size() == 9);
  for (std::size_t i = 1; i < ivs.size(); ++i)
    CHECK(Rational::parse(ivs[i - 1]["hi"].get<std::string>()) <= Rational::parse(ivs[i]["lo"].get<std::string>()));
  CHECK_FALSE(r10.any_fail());
  CHECK_THROWS_AS(roots_document(Family::Xi, 11, 80, false), UsageError);
  CHECK_THROWS_AS(roots_document(Family::Xi, 0, 80, true), UsageError);
}

TEST_CASE("binary: exit codes") {
  CHECK(run("gen --family xi --n 1 --format json").code == kExitPass);
  CHECK(run("gen --family xi --n 0").code == kExitUsage);
  CHECK(run("gen --family gamma --n 2").code == kExitUsage);
  CHECK(run("gen --family xi --n 2 --format xml").code == kExitUsage);
  CHECK(run("frobnicate").code == kExitUsage);
  CHECK(run("").code == kExitUsage);
  CHECK(run("verify --suite integral --n-max 7").code == kExitUsage);
  CHECK(run("verify --suite roots --n-max 3 --no-timestamp").code == kExitPass);
  CHECK(run("roots --family lambda --n 2").code == kExitPass);
  CHECK(run("roots --family xi --n 11").code == kExitUsage);
}

TEST_CASE("binary: outputs") {
  const Run csv = run("gen --family lambda --n 1 --format csv");
  CHECK(csv.out == "t,num,den\n0,1,7\n");
  const Run js = run("gen --family xi --n 1");
  CHECK(js.out.find("\"den\": \"4\"") != std::string::npos);
  // Identical flags give byte-identical reports without a timestamp.
  const Run a = run("--no-timestamp verify --suite structural --n-max 3");
  const Run b = run("--no-timestamp --jobs 1 verify --suite structural --n-max 3");
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  CHECK(a.out.find("timestamp") == std::string::npos);
  CHECK(run("verify --suite structural --n-max 1").out.find("timestamp") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "polyzeta_cli_test.json";
  std::filesystem::remove(path);
  CHECK(run("--out " + path.string() + " gen --family xi --n 3").code == kExitPass);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == gen_document(Family::Xi, 3).dump(2) + "\n");
  std::filesystem::remove(path);
}
