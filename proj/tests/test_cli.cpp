// End to end checks against the installed CLI binary. The harness passes the
// binary and the golden directory through the environment so the same test
// works from any build tree.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "golden_cases.h"

namespace {

std::string env_or_empty(const char* name) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : std::string();
}

int run_cli(const std::string& bin, const std::string& args, const std::string& out_file) {
  const std::string cmd = "\"" + bin + "\" " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden outputs reproduce byte for byte") {
  const std::string bin = env_or_empty("CLI_BIN");
  const std::string golden_dir = env_or_empty("GOLDEN_DIR");
  REQUIRE_MESSAGE(!bin.empty(), "CLI_BIN not set");
  REQUIRE_MESSAGE(!golden_dir.empty(), "GOLDEN_DIR not set");

  for (const auto& c : cli_golden::kCases) {
    CAPTURE(c.args);
    const std::string want = slurp(golden_dir + "/" + c.file);
    CHECK(run_cli(bin, c.args, "cli_out_a.tmp") == 0);
    CHECK(run_cli(bin, c.args, "cli_out_b.tmp") == 0);
    const std::string got_a = slurp("cli_out_a.tmp");
    CHECK(got_a == want);
    CHECK(got_a == slurp("cli_out_b.tmp"));
  }
  std::remove("cli_out_a.tmp");
  std::remove("cli_out_b.tmp");
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::string bin = env_or_empty("CLI_BIN");
  const std::string golden_dir = env_or_empty("GOLDEN_DIR");
  REQUIRE_MESSAGE(!bin.empty(), "CLI_BIN not set");
  REQUIRE_MESSAGE(!golden_dir.empty(), "GOLDEN_DIR not set");

  CHECK(run_cli(bin, "compositions 3 --out cli_out_file.tmp", "cli_out_stdout.tmp") == 0);
  CHECK(slurp("cli_out_file.tmp") == slurp(golden_dir + "/compositions_3.txt"));
  CHECK(slurp("cli_out_stdout.tmp").empty());
  std::remove("cli_out_file.tmp");
  std::remove("cli_out_stdout.tmp");
}

TEST_CASE("exit codes separate success, verify failure, and usage errors") {
  const std::string bin = env_or_empty("CLI_BIN");
  REQUIRE_MESSAGE(!bin.empty(), "CLI_BIN not set");
  const std::string sink = "cli_out_rc.tmp";

  CHECK(run_cli(bin, "--help", sink) == 0);
  CHECK(run_cli(bin, "compositions --help", sink) == 0);
  CHECK(run_cli(bin, "verify --suite pitree --max-n 6", sink) == 0);

  CHECK(run_cli(bin, "compositions", sink) == 2);           // missing n
  CHECK(run_cli(bin, "compositions 31", sink) == 2);        // enumeration guard
  CHECK(run_cli(bin, "sequence no_such_thing", sink) == 2); // unknown recipe
  CHECK(run_cli(bin, "tree woon --frobnicate", sink) == 2); // unknown flag
  CHECK(run_cli(bin, "verify --suite nope", sink) == 2);    // unknown suite
  CHECK(run_cli(bin, "iterated geometric geometric --json --dot --shape 0", sink) == 2);

  std::remove(sink.c_str());
}

}  // TEST_SUITE
