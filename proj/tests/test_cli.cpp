#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "foldcob/cli.hpp"

using namespace foldcob;

namespace {

struct CoutCapture {
  std::ostringstream out;
  std::streambuf* old;
  CoutCapture() : old(std::cout.rdbuf(out.rdbuf())) {}
  ~CoutCapture() { std::cout.rdbuf(old); }
  std::string text() const { return out.str(); }
};

template <std::size_t N>
int run(const char* (&argv)[N], std::string* captured = nullptr) {
  CoutCapture cap;
  int rc = run_command(static_cast<int>(N), argv);
  if (captured) *captured = cap.text();
  return rc;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream o;
  o << in.rdbuf();
  return o.str();
}

}  // namespace

TEST_CASE("cusp-parity subcommand prints the summand breakdown") {
  const char* argv[] = {"foldcob", "cusp-parity", "Dold(1,2)^2"};
  std::string out;
  CHECK(run(argv, &out) == 0);
  CHECK(out.find("(0, 1)") != std::string::npos);
  CHECK(out.find("parity 1") != std::string::npos);
}

TEST_CASE("group subcommand prints the assembled group") {
  const char* argv[] = {"foldcob", "group", "--n", "5", "--k", "2", "--oriented"};
  std::string out;
  CHECK(run(argv, &out) == 0);
  CHECK(out == "Z2 + Z2\n");
}

TEST_CASE("usage errors exit with 2") {
  const char* missing[] = {"foldcob", "group", "--n", "5"};
  CHECK(run(missing) == 2);
  const char* unknown[] = {"foldcob", "frobnicate"};
  CHECK(run(unknown) == 2);
  const char* two_modes[] = {"foldcob", "normal-form", "--eval", "--scenario"};
  CHECK(run(two_modes) == 2);
}

TEST_CASE("computation-domain errors exit with 1") {
  const char* wrong_dim[] = {"foldcob", "cusp-parity", "CP(2)"};
  CHECK(run(wrong_dim) == 1);
  const char* bad_regime[] = {"foldcob", "group", "--n", "6", "--k", "2"};
  CHECK(run(bad_regime) == 1);
  const char* bad_expr[] = {"foldcob", "normal-class", "CP(0)"};
  CHECK(run(bad_expr) == 1);
}

TEST_CASE("config models load through Load() expressions") {
  std::string expr = "Load(" FOLDCOB_DATA_DIR "/wall_x6.ring)";
  const char* argv[] = {"foldcob", "cusp-parity", expr.c_str()};
  std::string out;
  CHECK(run(argv, &out) == 0);
  CHECK(out.find("WallX6") != std::string::npos);
  CHECK(out.find("(1, 1)") != std::string::npos);
  CHECK(out.find("parity 0") != std::string::npos);
}

TEST_CASE("report files are structured and deterministic") {
  const std::string r1 = "cli_report_1.json";
  const std::string r2 = "cli_report_2.json";
  std::string dir = FOLDCOB_DATA_DIR;
  const char* argv1[] = {"foldcob", "--report", r1.c_str(), "verify-paper",
                         "--data-dir", dir.c_str()};
  const char* argv2[] = {"foldcob", "--report", r2.c_str(), "verify-paper",
                         "--data-dir", dir.c_str()};
  REQUIRE(run(argv1) == 0);
  REQUIRE(run(argv2) == 0);
  std::string a = slurp(r1);
  std::string b = slurp(r2);
  REQUIRE_FALSE(a.empty());
  CHECK(a == b);

  auto doc = nlohmann::ordered_json::parse(a);
  CHECK(doc["command"] == "verify-paper");
  CHECK(doc["results"]["failed"] == 0);
  CHECK(doc["results"]["items"].size() == 12);
  for (const auto& item : doc["results"]["items"]) {
    CHECK(item.contains("id"));
    CHECK(item.contains("inputs"));
    CHECK(item.contains("computed"));
    CHECK(item.contains("expected"));
    CHECK(item.contains("kind"));
    CHECK((item["status"] == "PASS" || item["status"] == "SKIP"));
  }
  std::remove(r1.c_str());
  std::remove(r2.c_str());
}

TEST_CASE("sw-number report carries inputs and the value") {
  const std::string path = "cli_report_sw.json";
  const char* argv[] = {"foldcob", "--report", path.c_str(), "sw-number",
                        "Dold(1,2)", "--partition", "2,3"};
  std::string out;
  REQUIRE(run(argv, &out) == 0);
  CHECK(out == "w_2 w_3 [Dold(1,2)] = 1\n");
  auto doc = nlohmann::ordered_json::parse(slurp(path));
  CHECK(doc["inputs"]["partition"] == nlohmann::ordered_json::array({2, 3}));
  CHECK(doc["results"]["value"] == 1);
  std::remove(path.c_str());
}
