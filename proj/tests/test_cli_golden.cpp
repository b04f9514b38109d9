// Golden-file checks for every CLI subcommand: fixed arguments must produce
// byte-identical stdout across runs, matching the committed golden files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  std::string output;
  int exit_code = -1;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(QFIBER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(QFIBER_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void check_golden(const std::string& name, const std::string& args) {
  CAPTURE(name);
  const RunResult first = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == read_golden(name));
  // byte-exact across runs
  const RunResult second = run_cli(args);
  CHECK(second.output == first.output);
}

}  // namespace

TEST_CASE("golden outputs per subcommand") {
  check_golden("eval.txt", "eval --structure M --term \"f(0,1,1)\"");
  check_golden("normalize.txt", "normalize --term \"f(f(x,y,z),x,y)\"");
  check_golden("classify.txt", "classify --formula \"!(x = 0) & !(x = 1)\" --target x");
  check_golden("define.txt", "define --rational 5/7");
  check_golden("autocheck.txt", "autocheck --profile \"0:1\"");
  check_golden("compose.txt", "compose --left \"0:1\" --right \"0:2, 1:-1\"");
  check_golden("escape.txt", "escape --support \"0,1\" --bound 10");
  check_golden("extend-iso.txt", "extend-iso --slope 1 --intercept 1");
}

TEST_CASE("exit code contract") {
  // semantic failure: unbound variable
  CHECK(run_cli("eval --term x").exit_code == 1);
  // parse failure in input text
  CHECK(run_cli("eval --term \"f(x,y)\"").exit_code == 2);
  // flag errors
  CHECK(run_cli("eval").exit_code == 2);
  CHECK(run_cli("eval --term x --no-such-flag").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  // failed check report exits 1
  CHECK(run_cli("extend-iso --slope 0 --intercept 0").exit_code == 1);
  // escape bound must be nonnegative
  CHECK(run_cli("escape --bound -1").exit_code == 1);
  // conflicting constraints
  CHECK(run_cli("escape --support 0 --coset \"0:3\" --bound 1").exit_code == 1);
  // success paths exit 0 and stay quiet on stderr
  CHECK(run_cli("eval --structure Q --term \"f(0,1,1)\"").output == "2\n");
}

TEST_CASE("escape distance stays above its bound") {
  const RunResult result = run_cli("escape --support \"0,1\" --bound 10");
  CHECK(result.exit_code == 0);
  // distance line carries an exact rational strictly above 11
  const std::string needle = "distance: ";
  const std::size_t at = result.output.find(needle);
  REQUIRE(at != std::string::npos);
  const std::string value = result.output.substr(at + needle.size());
  CHECK(value == "49/4\n");
}
