#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

struct Run {
  int code = -1;
  std::string out;
};

static Run run(const std::string& args) {
  const std::string cmd = std::string(SHADOWCTL) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST_CASE("compute") {
  auto r = run("compute --word '1 2 3 1 2 3' --format jsonl");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"t\":1,\"r\":1,\"y\":1,\"i\":2") != std::string::npos);
  r = run("compute --word '1 2 3 1 2 3'");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"rotation\"") != std::string::npos);
  CHECK(run("compute --word '1 2 3 1 2 3' --format text").out.find("circle number   3") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("compute --word '1 2 1'").code == 2);
  CHECK(run("compute --word '1 2 1 2'").code == 2);
  CHECK(run("compute --word ''").code == 2);
  CHECK(run("compute").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("enumerate --max-crossings 9").code == 2);
  CHECK(run("enumerate --max-crossings 4 --filters bogus").code == 2);
  CHECK(run("table --max-crossings 4 --format xml").code == 2);
  CHECK(run("hunt --target 't <<< r'").code == 2);
  CHECK(run("compute --word '1 1' --cap-r 0").code == 2);
  CHECK(run("replay --word '1 2 3 1 2 3' --kind t --witness '9d'").code == 2);
}

TEST_CASE("verify exit status") {
  auto r = run("verify --max-crossings 6");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"property_id\"") != std::string::npos);
  CHECK(run("verify --max-crossings 6 --format text").out.find("all checks passed") != std::string::npos);
  CHECK(run("verify --max-crossings 9").code == 2);
}

TEST_CASE("replay") {
  CHECK(run("replay --word '1 2 3 1 2 3' --kind t --witness 1d").code == 0);
  CHECK(run("replay --word '1 2 3 1 2 3' --kind t --witness 1o").code == 1);
  CHECK(run("replay --word '1 2 3 4 5 1 6 3 7 5 8 6 2 7 4 8' --kind r --witness 1").code == 1);
}

TEST_CASE("hunt") {
  auto r = run("hunt --target 'r >= 4' --max-crossings 6 --format text");
  CHECK(r.code == 0);
  CHECK(r.out.find("not found up to n = 6") != std::string::npos);
}

TEST_CASE("output does not depend on --jobs") {
  for (const char* cmd : {"enumerate --max-crossings 7", "table --max-crossings 7 --format csv",
                          "table --max-crossings 7 --format jsonl", "verify --max-crossings 7",
                          "hunt --target 't == 2' --max-crossings 7"}) {
    INFO(cmd);
    const auto a = run(std::string(cmd) + " --jobs 1");
    const auto b = run(std::string(cmd) + " --jobs 4");
    const auto c = run(std::string(cmd) + " --jobs 4");
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
    CHECK_FALSE(a.out.empty());
  }
}
