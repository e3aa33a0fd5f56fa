#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <doctest.h>

#ifndef MCUFORGE_CLI_PATH
#define MCUFORGE_CLI_PATH "mcuforge"
#endif

namespace {

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(MCUFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("decompose is byte-identical under a fixed random seed") {
  CmdResult a = run_cli("decompose -n 3 -u random:42");
  CmdResult b = run_cli("decompose -n 3 -u random:42");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"width\": 4") != std::string::npos);
}

TEST_CASE("decompose handles n=0 and named gates") {
  CmdResult r = run_cli("decompose -n 0 -u h");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"gates\"") != std::string::npos);
  CHECK(r.out.find("one-qubit") != std::string::npos);
}

TEST_CASE("decompose emits QASM for the 6-qubit Toffoli") {
  CmdResult r = run_cli("decompose -n 5 -u x --lower -f qasm");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("OPENQASM 2.0;", 0) == 0);
  CHECK(r.out.find("qreg q[6];") != std::string::npos);
  CHECK(r.out.find("cx q[") != std::string::npos);
}

TEST_CASE("decompose usage errors exit with 2") {
  CHECK(run_cli("decompose -n 2 -u nosuchgate").exit_code == 2);
  CHECK(run_cli("decompose -n 2 -u x -f qasm").exit_code == 2);  // qasm needs --lower
  CHECK(run_cli("decompose -u x").exit_code == 2);               // missing -n
}

TEST_CASE("decompose unwritable output exits with 3") {
  CHECK(run_cli("decompose -n 1 -u x -o /nonexistent-dir/out.json").exit_code == 3);
}

TEST_CASE("verify passes on a small range") {
  CmdResult r = run_cli("verify --n-max 3 --trials 2 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify: OK") != std::string::npos);
  CHECK(r.out.find("n=3") != std::string::npos);
}

TEST_CASE("verify detects an injected wrong root branch") {
  CmdResult r = run_cli("verify --n-max 3 --trials 1 --seed 5 --wrong-root-branch");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  // n_max = 1 has no roots at all, so even the broken branch passes.
  CHECK(run_cli("verify --n-max 1 --trials 1 --wrong-root-branch").exit_code == 0);
}

TEST_CASE("bench emits one row per n") {
  CmdResult r = run_cli("bench 3 12 --trials 1");
  CHECK(r.exit_code == 0);
  int lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 11);  // header + 10 rows
  CHECK(r.out.rfind("n,depth_controlled,", 0) == 0);
}

TEST_CASE("experiment a with p=0 reads all ones every shot") {
  CmdResult r = run_cli("experiment a -n 4 -p 0 --shots 1000");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\n4,1,1000,") != std::string::npos);
}

TEST_CASE("experiment b at full depolarization approaches the uniform floor") {
  CmdResult r = run_cli("experiment b -n 3 -p 1 --shots 16000 --seed 9");
  CHECK(r.exit_code == 0);
  // Parse p_ones from the CSV data row: n,p_ones,...
  std::size_t nl = r.out.find('\n');
  REQUIRE(nl != std::string::npos);
  std::size_t comma = r.out.find(',', nl + 1);
  REQUIRE(comma != std::string::npos);
  double p_ones = std::stod(r.out.substr(comma + 1));
  const double p = 1.0 / 16.0;
  const double sigma = std::sqrt(p * (1 - p) / 16000.0);
  CHECK(std::abs(p_ones - p) < 3 * sigma);
}
