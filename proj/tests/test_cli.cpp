#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(LEGENDRIAN_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("invariants in JSON") {
    const Run r = run("--json invariants corpus:trefoil");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["format"] == 1);
    CHECK(j["tb"] == 1);
    CHECK(j["r"][0] == 0);
  }

  TEST_CASE("front files and validation errors") {
    CHECK(run("validate " + temp_file("cli_ok.front", "L 1\nR 1\n")).code == 0);
    const Run bad = run("validate " + temp_file("cli_bad.front", "L 1\nX 3\nR 1\n"));
    CHECK(bad.code == 2);
    CHECK(run("invariants " + temp_file("cli_garbage.front", "Q 1\n")).code == 2);
    CHECK(run("invariants corpus:no_such_entry").code == 2);
    CHECK(run("--bogus-flag").code == 2);
  }

  TEST_CASE("polynomials") {
    const Run r = run("--json poly corpus:trefoil --order 2");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("λ^2 + 4λ + 5") != std::string::npos);
  }

  TEST_CASE("compare verdicts") {
    const Run a = run("compare corpus:6_2 corpus:6_2_mirror");
    CHECK(a.code == 0);
    CHECK(a.out.rfind("DISTINGUISHED", 0) == 0);
    const Run b = run("--json compare corpus:trefoil corpus:trefoil");
    REQUIRE(b.code == 0);
    CHECK(nlohmann::json::parse(b.out)["verdict"] == "INDISTINGUISHABLE-AT-BOUNDS");
  }

  TEST_CASE("DGA JSON round trip through the CLI") {
    const Run d = run("--json dga corpus:trefoil");
    REQUIRE(d.code == 0);
    const auto j = nlohmann::json::parse(d.out);
    const std::string path = temp_file("cli_trefoil.json", j["dga"].dump());
    const Run c = run("--json charalg " + path);
    CHECK(c.code == 0);
  }

  TEST_CASE("ncopy output is a valid front") {
    const Run r = run("ncopy corpus:unknot --n 3");
    REQUIRE(r.code == 0);
    CHECK(run("validate " + temp_file("cli_triple.front", r.out)).code == 0);
  }

  TEST_CASE("selftest") { CHECK(run("selftest").code == 0); }
}
