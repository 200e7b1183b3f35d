#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + GK2_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("frobenius subcommand", "[cli]") {
  const auto r = run("frobenius --q 2 --n 5 --format json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"schema\": 1"));
  CHECK(contains(r.out, "\"gk2\": 7"));
  CHECK(contains(r.out, "\"gk1\": 9"));
  CHECK(contains(r.out, "\"isomorphic\": false"));
  CHECK(run("frobenius --q 2 --n 3").code == 1);
}

TEST_CASE("points subcommand", "[cli]") {
  const auto r = run("points --q 2 --n 3");
  CHECK(r.code == 0);
  CHECK(r.out == "count,expected,o1,o2,field_size\n225,225,3,6,64\n");
  const auto listed = run("points --q 2 --n 3 --list");
  CHECK(std::count(listed.out.begin(), listed.out.end(), '\n') == 226);
}

TEST_CASE("fengrao-table subcommand", "[cli]") {
  const auto r = run("fengrao-table --q 2 --n 5 --orbit O1 --lmax 100 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("N,k,rho_l,nu_l,d_ord\n3968,3967,0,1,1\n3968,3966,22,2,2\n", 0) == 0);
  CHECK(contains(r.out, "\n3968,3943,65,4,4\n"));
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 101);

  const auto md = run("fengrao-table --q 2 --n 5 --orbit O2 --lmax 3 --format md");
  CHECK(md.out == "| N | k | rho_l | nu_l | d_ord |\n| --- | --- | --- | --- | --- |\n"
                  "| 3968 | 3967 | 0 | 1 | 1 |\n| 3968 | 3966 | 22 | 2 | 2 |\n| 3968 | 3965 | 28 | 2 | 2 |\n");
}

TEST_CASE("quantum-table subcommand", "[cli]") {
  const auto r = run("quantum-table --q 2 --n 5 --orbit O1 --lmin 46 --lmax 46");
  CHECK(r.out == "l,d_ord,s_min,s_max,regime,discrepancy\n46,6,46,3871,intermediate,\n");
  const auto ref = run(std::string("quantum-table --q 2 --n 5 --orbit O1 --reference ") + GK2_REFERENCE_DIR +
                       "/quantum_o1.csv");
  CHECK(ref.code == 0);
  CHECK(contains(ref.out, "46,6,46,3871,intermediate,\"s_min: table 47, formula 46\"\n"));
  const auto cor = run("quantum-table --q 2 --n 5 --orbit O1 --lmin 137 --lmax 138");
  CHECK(contains(cor.out, "138,93,1,3692,large-index,\n"));
}

TEST_CASE("semigroup and gaps subcommands", "[cli]") {
  const auto s = run("semigroup --q 2 --n 5 --orbit O2 --format json");
  CHECK(s.code == 0);
  CHECK(contains(s.out, "\"generators\": \"22 28 29 30 31 32 33\""));
  CHECK(contains(s.out, "\"genus\": 46"));
  const auto g = run("gaps --q 2 --n 3 --orbit O2");
  CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 11);
}

TEST_CASE("code-matrix and verify subcommands", "[cli]") {
  const auto m = run("code-matrix --q 2 --n 3 --orbit O1 --l 11");
  CHECK(m.code == 0);
  CHECK(m.out == "orbit,l,N,rho_l,rank\nO1,11,224,20,11\n");
  const auto v = run("verify --q 2 --n 5");
  CHECK(v.code == 0);
  CHECK_FALSE(contains(v.out, "FAILED"));
}

TEST_CASE("output is byte-deterministic", "[cli]") {
  for (const char* args : {"fengrao-table --q 2 --n 5 --orbit O2 --format json", "points --q 2 --n 5 --list",
                           "verify --q 2 --n 3 --format md"}) {
    CAPTURE(args);
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run("points --q 2 --n 5 --list").out == run("points --q 2 --n 5 --list", "GK2_THREADS=1").out);
  CHECK(run("points --q 2 --n 3", "GK2_THREADS=zero").code == 1);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run("").code == 1);
  CHECK(run("nonsense").code == 1);
  CHECK(run("points --q 6 --n 3").code == 1);
  CHECK(run("points --q 2 --n 4").code == 1);
  CHECK(run("fengrao-table --q 2 --n 5 --format xml").code == 1);
  CHECK(run("fengrao-table --q 2 --n 5 --lmin 10 --lmax 5").code == 1);
  CHECK(run("points --q 7 --n 3").code == 1);
  CHECK(run("points --q 2 --n 11").code == 1);
  CHECK(run("--help").code == 0);
}
