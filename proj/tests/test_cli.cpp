#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#ifndef COMBDYN_CLI_PATH
#error "COMBDYN_CLI_PATH must point at the combdyn binary"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell, merging stderr into the captured output.
RunResult run(const std::string& args) {
  const std::string cmd = std::string(COMBDYN_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run_raw(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run_env(const std::string& env, const std::string& args) {
  return run_raw(env + " " + std::string(COMBDYN_CLI_PATH) + " " + args);
}

RunResult run_pipe(const std::string& input, const std::string& args) {
  return run_raw("printf '%s' '" + input + "' | " +
                 std::string(COMBDYN_CLI_PATH) + " " + args);
}

}  // namespace

TEST_CASE("map subcommand") {
  RunResult r = run("map exc '2 4 1 3 5 8 9 6 7'");
  CHECK(r.code == 0);
  CHECK(r.out == "[[1,1],[2,3],[6,7],[7,8]]\n");

  CHECK(run("map rskd '4 1 2 3 5'").out == "UUUDUDDDUD\n");
  CHECK(run("map ep '3 5 1 2 4'").out == "UUUDUUDDDD\n");
  CHECK(run("map rot '[[1,6],[2,3],[4,5],[7,10],[8,9]]'").out ==
        "[[1,8],[2,7],[3,4],[5,6],[9,10]]\n");
  // maps whose input kind needs a size take --n / --m
  CHECK(run("map ra '[[1,2]]' --n 4").out == "[[3,3]]\n");
  CHECK(run("map hat '[[1,2]]' --m 4").out == "[[1,2],[6,7]]\n");

  SUBCASE("exit codes") {
    CHECK(run("map bogus '1 2 3'").code == 2);         // unknown map
    CHECK(run("map ep 'x y'").code == 2);              // parse error
    CHECK(run("map ep '3 2 1'").code == 3);            // not 321-avoiding
    CHECK(run("map ra '[[1,2]]'").code == 2);          // missing --n
  }

  SUBCASE("stdin dash") {
    RunResult s = run_pipe("4 1 2 3 5", "map rskd -");
    CHECK(s.code == 0);
    CHECK(s.out == "UUUDUDDDUD\n");
  }

  SUBCASE("json format") {
    RunResult j = run("--format json map exc '2 4 1 3 5 8 9 6 7'");
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed == nlohmann::json::parse("[[1,1],[2,3],[6,7],[7,8]]"));
  }
}

TEST_CASE("orbit subcommand") {
  RunResult r = run("orbit rs '1 4 2 3' --stats fp,h2,l2,inv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "1 4 2 3  fp=1 h2=1 l2=1 inv=2\n"
        "2 1 3 4  fp=2 h2=0 l2=1 inv=1\n"
        "1 3 4 2  fp=1 h2=2 l2=1 inv=2\n"
        "2 4 1 3  fp=0 h2=1 l2=2 inv=3\n"
        "3 1 2 4  fp=1 h2=1 l2=0 inv=2\n"
        "1 2 4 3  fp=2 h2=0 l2=1 inv=1\n"
        "2 3 1 4  fp=1 h2=2 l2=2 inv=2\n"
        "3 1 4 2  fp=0 h2=1 l2=0 inv=3\n");

  RunResult plain = run("orbit rot '[[1,2],[3,4]]'");
  CHECK(plain.code == 0);
  CHECK(plain.out == "[[1,2],[3,4]]\n[[1,4],[2,3]]\n");

  SUBCASE("json format") {
    RunResult j = run("--format json orbit rs '2 1 3' --stats fp");
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["dynamic"] == "rs");
    CHECK(parsed["size"] == parsed["elements"].size());
    for (const auto& el : parsed["elements"])
      CHECK(el["stats"].contains("fp"));
  }

  SUBCASE("exit codes") {
    CHECK(run("orbit bogus '1 2 3'").code == 2);
    CHECK(run("orbit rs '1 2 3' --stats card").code == 2);  // wrong kind
  }
}

TEST_CASE("homomesy subcommand") {
  RunResult r = run("homomesy fp rs --n 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("homomesic") != std::string::npos);

  // refuted verdicts still print the full report
  CHECK(run("homomesy inv rs --n 4").code == 1);
  CHECK(run("homomesy card ra --n 4").code == 0);

  SUBCASE("json format") {
    RunResult j = run("--format json homomesy card ra --n 4");
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["homomesic"] == true);
    CHECK(parsed["c"] == nlohmann::json::array({3, 2}));
    CHECK(parsed["orbits"].is_array());
  }

  SUBCASE("cap") {
    CHECK(run("homomesy fp rs --n 11").code == 2);  // default cap is 10
    CHECK(run("homomesy fp rs --n 11 --max-n 11").code == 0);
    CHECK(run_env("COMBDYN_MAX_N=4", "homomesy fp rs --n 5").code == 2);
    CHECK(run_env("COMBDYN_MAX_N=4", "homomesy fp rs --n 5 --max-n 5").code ==
          0);
    CHECK(run_env("COMBDYN_MAX_N=abc", "homomesy fp rs --n 3").code == 2);
    CHECK(run_env("COMBDYN_MAX_N=0", "homomesy fp rs --n 3").code == 2);
  }

  SUBCASE("exit codes") {
    CHECK(run("homomesy bogus rs --n 4").code == 2);
    CHECK(run("homomesy fp bogus --n 4").code == 2);
    CHECK(run("homomesy fp rs --n 0").code == 2);
    CHECK(run("homomesy fp rs").code == 2);  // --n is required
  }
}

TEST_CASE("verify subcommand") {
  RunResult r = run("verify orbit-divides --n 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") != std::string::npos);

  RunResult all = run("verify all --n 4 --m 2 --jobs 2");
  CHECK(all.code == 0);
  // deterministic output regardless of parallelism, once timings are stripped
  const std::string strip = " | sed -E 's/[0-9]+\\.[0-9]+s//'";
  RunResult two = run_raw(std::string(COMBDYN_CLI_PATH) +
                          " verify all --n 4 --m 2 --jobs 2" + strip);
  RunResult one = run_raw(std::string(COMBDYN_CLI_PATH) +
                          " verify all --n 4 --m 2 --jobs 1" + strip);
  CHECK(two.out == one.out);
  CHECK(!two.out.empty());

  SUBCASE("json format") {
    RunResult j = run("--format json verify orbit-divides --n 4");
    auto parsed = nlohmann::json::parse(j.out);
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["pass"] == true);
    CHECK(parsed[0]["id"] == "orbit-divides");
  }

  SUBCASE("exit codes") {
    CHECK(run("verify bogus-id").code == 2);
    CHECK(run("verify all --jobs 0").code == 2);
  }
}

TEST_CASE("enumerate subcommand") {
  RunResult r = run("enumerate avoiders --n 3");
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 3\n1 3 2\n2 1 3\n2 3 1\n3 1 2\n");

  CHECK(run("enumerate dyck --n 2").out == "UUDD\nUDUD\n");
  CHECK(run("enumerate antichains --n 3").out ==
        "[]\n[[1,1]]\n[[1,1],[2,2]]\n[[1,2]]\n[[2,2]]\n");
  CHECK(run("enumerate antichains-b --m 1").out == "[]\n[[1,1]]\n");
  CHECK(run("enumerate matchings --n 2").out ==
        "[[1,4],[2,3]]\n[[1,2],[3,4]]\n");

  // centrally symmetric matchings only
  RunResult c = run("enumerate csnc --n 3");
  CHECK(c.code == 0);
  CHECK(c.out ==
        "[[1,6],[2,5],[3,4]]\n[[1,4],[2,3],[5,6]]\n[[1,2],[3,6],[4,5]]\n");

  SUBCASE("exit codes") {
    CHECK(run("enumerate bogus --n 3").code == 2);
    CHECK(run("enumerate avoiders").code == 2);        // missing --n
    CHECK(run("enumerate avoiders --n 11").code == 2); // cap
    CHECK(run("enumerate avoiders --n 11 --max-n 12").code == 0);
  }
}

TEST_CASE("top level behavior") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);           // a subcommand is required
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--format yaml map ep '1 2'").code == 2);
}