#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

const char* cli_path() {
  const char* p = std::getenv("SLBETHE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "SLBETHE_CLI must point at the built binary");
  return p;
}

RunResult run(const std::string& args) {
  RunResult r;
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse(const RunResult& r) {
  REQUIRE_FALSE(r.out.empty());
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("grading listing carries the envelope and the full orbit") {
  auto r = run("gradings --r 1 --s 1");
  CHECK(r.code == 0);
  json j = parse(r);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "gradings");
  CHECK(j["count"] == 6);
  REQUIRE(j["gradings"].size() == 6);
  CHECK(j["gradings"][0]["signs"] == "++--");
  CHECK(j["gradings"][0]["distinguished"] == true);
  // reflections connect the orbit
  CHECK(j["reflections"].size() >= 5);

  auto r2 = run("gradings --r 0 --s 1");
  CHECK(parse(r2)["count"] == 3);
}

TEST_CASE("degenerate ranks are a usage error") {
  auto r = run("gradings --r -1 --s -1");
  CHECK(r.code == 2);
}

TEST_CASE("diagram output lists sign-dependent root data") {
  auto r = run("dynkin --r 1 --s 0 --grading +-+");
  CHECK(r.code == 0);
  json j = parse(r);
  REQUIRE(j["gradings"].size() == 1);
  const auto& g = j["gradings"][0];
  CHECK(g["signs"] == "+-+");
  CHECK(g["root_degrees"] == json::array({1, 1}));
  CHECK(g["cartan"][0][0] == 0);
  CHECK(g["cartan"][0][1] == 1);  // -p_2 with p_2 = -1
  CHECK(g["dot"].get<std::string>().find("graph") != std::string::npos);
}

TEST_CASE("tableau listing reproduces the signed reference fillings") {
  auto r = run("tableaux --r 1 --s 0 --grading +-+ --shape 2,1");
  CHECK(r.code == 0);
  json j = parse(r);
  REQUIRE(j["tableaux"].size() == 8);
  const std::vector<int> signs = {-1, 1, 1, -1, -1, 1, 1, -1};
  for (std::size_t k = 0; k < 8; ++k)
    CHECK(j["tableaux"][k]["sign"] == signs[k]);
  // first and last fillings in row-major order
  CHECK(j["tableaux"][0]["rows"] == json::parse("[[1,1],[2]]"));
  CHECK(j["tableaux"][7]["rows"] == json::parse("[[2,3],[3]]"));
}

TEST_CASE("byte-identical reruns for identical seed") {
  const std::string args = "transfer --r 1 --s 0 --grading ++- --shape 2,1 --seed 9";
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  // a different seed draws different data
  auto c = run("transfer --r 1 --s 0 --grading ++- --shape 2,1 --seed 10");
  CHECK(c.out != a.out);
}

TEST_CASE("exact transfer output serializes rationals as strings") {
  auto r = run("transfer --r 0 --s 0 --grading +- --shape 1 --seed 4");
  CHECK(r.code == 0);
  json j = parse(r);
  const auto& num = j["transfer"]["num"];
  REQUIRE(num.is_array());
  CHECK(num[0].is_string());
  const std::string v = num[0].get<std::string>();
  CHECK(v.find_first_not_of("-0123456789/") == std::string::npos);
}

TEST_CASE("float transfer output serializes complex pairs") {
  auto r = run("transfer --r 0 --s 0 --grading +- --shape 1 --seed 4 --backend float");
  CHECK(r.code == 0);
  json j = parse(r);
  const auto& num = j["transfer"]["num"];
  REQUIRE(num.is_array());
  REQUIRE(num[0].is_array());
  CHECK(num[0].size() == 2);
  CHECK(num[0][0].is_number());
}

TEST_CASE("verify subcommand reports certificates and sets the exit code") {
  auto r = run("verify jt --r 1 --s 0 --shape 2,1 --seed 3");
  CHECK(r.code == 0);
  json j = parse(r);
  REQUIRE(j["certificates"].size() == 3);  // one per grading
  for (const auto& c : j["certificates"]) {
    CHECK(c["pass"] == true);
    CHECK(c["method"] == "sampled");
    CHECK(c["samples"].get<long>() >= c["degree_bound"].get<long>() + 1);
  }
  CHECK(j["all_passed"] == true);

  auto rf = run("verify jt --r 1 --s 0 --shape 2,1 --seed 3 --backend float");
  CHECK(rf.code == 0);
  for (const auto& c : parse(rf)["certificates"])
    CHECK(c["method"] == "float");
}

TEST_CASE("series and lattice verifications run exactly through the CLI") {
  for (const char* kind : {"series", "tsystem"}) {
    auto r = run(std::string("verify ") + kind + " --r 0 --s 1 --seed 2");
    CHECK(r.code == 0);
    json j = parse(r);
    CHECK(j["all_passed"] == true);
    CHECK(j["certificates"].size() >= 3);
  }
}

TEST_CASE("degenerate chain solve finds the zero root") {
  auto r = run("solve-bae --grading ++ --counts 1 --sites 2");
  CHECK(r.code == 0);
  json j = parse(r);
  REQUIRE(j["solutions"].size() >= 1);
  const auto& root = j["solutions"][0]["roots"][0][0];
  CHECK(std::abs(root[0].get<double>()) < 1e-10);
  CHECK(std::abs(root[1].get<double>()) < 1e-10);
  CHECK(j["all_passed"] == true);
}

TEST_CASE("system input can come from a file") {
  const char* path = "cli_sys_input.json";
  {
    std::ofstream f(path);
    f << R"({"grading": {"r": 0, "s": 1, "signs": "+--"},
             "counts": [2, 1],
             "inhom": [[0.0, 0.0], [0.0, 0.0]]})";
  }
  auto r = run(std::string("solve-bae --in ") + path);
  std::remove(path);
  CHECK(r.code == 0);
  json j = parse(r);
  CHECK(j["solutions"].size() >= 1);
  CHECK(j["all_passed"] == true);
}

TEST_CASE("oversized systems are refused") {
  auto r = run("solve-bae --grading ++-- --counts 3,3,3 --sites 4");
  CHECK(r.code == 2);
}

TEST_CASE("empty systems come back trivially solved") {
  auto r = run("solve-bae --grading ++- --counts 0,0 --sites 2");
  CHECK(r.code == 0);
  json j = parse(r);
  REQUIRE(j["solutions"].size() == 1);
  CHECK(j["solutions"][0]["residual"].get<double>() == 0.0);
}

TEST_CASE("grading walk through the CLI lands on the reversed sequence") {
  auto r = run("particle-hole --grading +-- --counts 0,1 --sites 2 --path 1,2");
  CHECK(r.code == 0);
  json j = parse(r);
  REQUIRE(j["steps"].size() == 2);
  CHECK(j["steps"][0]["result"]["new_grading"]["signs"] == "-+-");
  CHECK(j["steps"][1]["result"]["new_grading"]["signs"] == "--+");
  CHECK(j["final"]["grading"]["signs"] == "--+");
  REQUIRE(j["final"]["roots"].size() == 2);
  CHECK(j["final"]["roots"][0].size() == 2);  // dual color picks up two roots
  CHECK(j["final"]["roots"][1].size() == 0);
  CHECK(j["all_passed"] == true);
}

TEST_CASE("unknown flags and missing arguments fail cleanly") {
  CHECK(run("tableaux --r 1 --s 0 --grading +-+").code != 0);  // no shape
  CHECK(run("verify --r 1 --s 0").code != 0);                  // no kind
  CHECK(run("nonsense").code != 0);
}
