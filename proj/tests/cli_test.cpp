#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "nlohmann/json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args) {
  const std::string err_path = "cli_test_stderr.txt";
  const std::string cmd = std::string(GYROFID_CLI_PATH) + " " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("add") {
  const Run r = run("add --u '[0.5,0,0]' --v '[0.5,0,0]'");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"result\":[0.8,0,0],\"gamma\":1.666666667}\n");
}

TEST_CASE("fidelity qubit") {
  const Run r = run("fidelity --kind qubit --u '[0.6,0,0]' --v '[0,0.6,0]'");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "qubit");
  CHECK(std::abs(j["value"].get<double>() - 0.82) <= 1e-10);
  CHECK(j["abs_diff"].get<double>() <= 1e-10);
}

TEST_CASE("fidelity kinds agree with their oracles") {
  for (const char* kind : {"mobius", "boost", "spectral"}) {
    const Run r = run(std::string("fidelity --kind ") + kind +
                      " --u '[0.1,0.2,-0.3,0.4]' --v '[-0.5,0.1,0,0.2]'");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["abs_diff"].get<double>() <= 1e-9);
  }
}

TEST_CASE("matrix mobius") {
  const Run r = run("matrix --kind mobius --v '[0.6,0,0]'");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  const json expected = json::parse(
      "[[0.34,0.3,0,0],[0.3,0.34,0,0],[0,0,0.16,0],[0,0,0,0.16]]");
  CHECK(j["matrix"] == expected);
  CHECK(j["trace"] == 1);
}

TEST_CASE("errors go to stderr as JSON") {
  SUBCASE("n below three") {
    const Run r = run("fidelity --kind mobius --u '[0.1,0.1]' --v '[0.1,0.1]' --n 2");
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    const json e = json::parse(r.err);
    CHECK(e["code"] == "invalid_argument");
    CHECK(e["message"].get<std::string>().find("got 2") != std::string::npos);
  }
  SUBCASE("outside the ball") {
    const Run r = run("add --u '[1.2,0,0]' --v '[0,0,0]'");
    CHECK(r.status == 2);
    CHECK(json::parse(r.err)["code"] == "ball_violation");
  }
  SUBCASE("malformed vector") {
    const Run r = run("add --u '[0.1,' --v '[0,0,0]'");
    CHECK(r.status == 2);
    CHECK(json::parse(r.err).contains("code"));
  }
  SUBCASE("unknown subcommand") {
    const Run r = run("frobnicate");
    CHECK(r.status == 2);
    CHECK(json::parse(r.err)["code"] == "usage");
  }
}

TEST_CASE("verify is deterministic") {
  const Run a = run("verify --suite gyro --trials 20 --seed 5");
  const Run b = run("verify --suite gyro --trials 20 --seed 5");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["passed"] == true);
  CHECK(j["suite"] == "gyro");
  CHECK(j["records"].size() > 5);
  CHECK(j["records"][0].contains("status"));
}
