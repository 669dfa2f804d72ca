#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(P1KIT_CLI) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(P1KIT_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("splitting-type on the Euler pencil prints (1)") {
  const auto r = run("splitting-type --pencil " + data("euler.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "(1)\n");
}

TEST_CASE("splitting-type with cohomology table") {
  const auto r = run("splitting-type --cohomology --pencil " + data("block_210.json"));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("(2,1,0)\nn,h0,h1\n", 0) == 0);
  CHECK(r.out.find("\n0,6,0\n") != std::string::npos);
}

TEST_CASE("stromme-roundtrip verdicts") {
  auto r = run("stromme-roundtrip --pencil " + data("block_210.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "original: (2,1,0)\nrecovered: (2,1,0)\nPASS\n");
  r = run("stromme-roundtrip --pencil " + data("rank_drop.json"));
  CHECK(r.code == 1);
}

TEST_CASE("chow-betti prints three matching rows") {
  const auto r = run("chow-betti --r 3 --max-codim 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("strata,1,1,2,2,3,3,MATCH") != std::string::npos);
  CHECK(r.out.find("subring,1,1,2,2,3,3,MATCH") != std::string::npos);
  CHECK(r.out.find("partitions,1,1,2,2,3,3,MATCH") != std::string::npos);
}

TEST_CASE("conn-check claimBGL") {
  const auto r = run("conn-check --preset claimBGL --n 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("derived 3-conn, claimed 3-conn, PASS") != std::string::npos);
}

TEST_CASE("strata-table and ktheory-verify") {
  auto r = run("strata-table --r 2 --d 0 --max-codim 3");
  CHECK(r.code == 0);
  CHECK(r.out == "e,u,multiplicities,flag_poincare\n0/0,0,2,1\n1/-1,1,1/1,1/1\n2/-2,3,1/1,1/1\n");
  r = run("ktheory-verify --r-max 3 --part-bound 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("pointcount emits JSON lines and refuses over budget") {
  auto r = run("pointcount --model kronecker --D 1 --r 1 --q 2,3,5");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"complement\":5") != std::string::npos);
  CHECK(r.out.find("\"codim_fit\":0.0") != std::string::npos);
  r = run("--budget 100 pointcount --model fr --D 2 --r 1 --q 2,3,5");
  CHECK(r.code == 3);
  CHECK(r.out.find("refused") != std::string::npos);
}

TEST_CASE("exit codes for usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("strata-table").code == 2);
  CHECK(run("conn-check --preset nope").code == 2);
  CHECK(run("splitting-type --pencil /nonexistent.json").code == 2);
  CHECK(run("--field Fp:9 splitting-type --random 2,1").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("malformed JSON reports the position") {
  const auto r = run("splitting-type --pencil " + data("malformed.json"));
  CHECK(r.code == 2);
  CHECK(r.out.find("position") != std::string::npos);
}

TEST_CASE("rank-deficient pencil is a verification failure") {
  const auto r = run("splitting-type --pencil " + data("rank_drop.json"));
  CHECK(r.code == 1);
}

TEST_CASE("identical configuration gives identical bytes") {
  for (const char* args : {"--seed 9 --field Fp:101 stromme-roundtrip --random 4,2 --scramble",
                           "--seed 3 --field Fp:5 --format json splitting-type --random 3,2 --cohomology",
                           "--seed 1 splitting-type --random 2,2 --scramble"}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
