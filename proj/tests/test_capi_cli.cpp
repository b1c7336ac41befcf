// Exercises the shared library through the public C header only, then the
// installed CLI binary end to end.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "sepcomp/sepcomp.h"

namespace {

constexpr const char* kIntroText = R"(group z2
order 2
table
0 1
1 0

fgroup full2
group z2
domain 2
gen 1 0
gen 0 1
)";

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(SEPCOMP_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string samples(const char* file) {
  return std::string(SEPCOMP_SAMPLES_DIR) + "/" + file;
}

}  // namespace

TEST_CASE("C API: load, analyze, error reporting") {
  sepcomp_workspace* ws = sepcomp_workspace_new();
  REQUIRE(ws != nullptr);

  CHECK(sepcomp_workspace_load_text(ws, "intro.txt", kIntroText) == SEPCOMP_OK);

  sepcomp_report* report = nullptr;
  REQUIRE(sepcomp_command_analyze(ws, "full2", 0, &report) == SEPCOMP_OK);
  CHECK(sepcomp_report_exit_code(report) == 0);
  const std::string text = sepcomp_report_text(report);
  CHECK(text.find("analyze full2\n") == 0);
  CHECK(text.find("controllable: true\n") != std::string::npos);
  sepcomp_report_free(report);

  // unknown names come back as a report with exit 4, not a hard failure
  report = nullptr;
  REQUIRE(sepcomp_command_analyze(ws, "missing", 0, &report) == SEPCOMP_OK);
  CHECK(sepcomp_report_exit_code(report) == 4);
  CHECK(std::string(sepcomp_report_text(report))
            .find("ERR 4 dangling-reference: ") != std::string::npos);
  sepcomp_report_free(report);

  // parse failures surface through last_error
  CHECK(sepcomp_workspace_load_text(ws, "bad.txt", "group g\norder x\n") ==
        SEPCOMP_ERROR_INPUT);
  CHECK(std::string(sepcomp_workspace_last_error_kind(ws)) == "parse");
  CHECK(sepcomp_workspace_last_error_exit(ws) == 4);
  CHECK(std::string(sepcomp_workspace_last_error(ws)).find("bad.txt:2:") !=
        std::string::npos);

  CHECK(sepcomp_workspace_set_max_closure(ws, 0) == SEPCOMP_ERROR_ARGUMENT);
  CHECK(sepcomp_command_analyze(nullptr, "x", 0, &report) ==
        SEPCOMP_ERROR_ARGUMENT);

  sepcomp_workspace_free(ws);
}

TEST_CASE("C API: closure bound") {
  sepcomp_workspace* ws = sepcomp_workspace_new();
  REQUIRE(ws != nullptr);
  CHECK(sepcomp_workspace_set_max_closure(ws, 3) == SEPCOMP_OK);
  CHECK(sepcomp_workspace_load_text(ws, "intro.txt", kIntroText) == SEPCOMP_OK);
  sepcomp_report* report = nullptr;
  REQUIRE(sepcomp_command_analyze(ws, "full2", 0, &report) == SEPCOMP_OK);
  CHECK(sepcomp_report_exit_code(report) == 4);
  CHECK(std::string(sepcomp_report_text(report)).find("ERR 4 too-large: ") !=
        std::string::npos);
  sepcomp_report_free(report);
  sepcomp_workspace_free(ws);
}

TEST_CASE("CLI: analyze the sample workspace") {
  const auto r = run_cli("analyze full2 --workspace " + samples("intro.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "analyze full2\n"
        "group: z2 order 2\n"
        "domain: 2\n"
        "elements: 4\n"
        "faithful: true\n"
        "separates-points: true\n"
        "function-group: true\n"
        "pointwise-dense: true\n"
        "controllable: true\n"
        "normal: true\n"
        "d-lattice: 4 sets\n"
        "e-lattice: 4 sets\n"
        "omega-extension-identity: true\n");

  // byte-identical across runs
  const auto again = run_cli("analyze full2 --workspace " + samples("intro.txt"));
  CHECK(again.output == r.output);

  const auto cube = run_cli("analyze cube4 --workspace " + samples("intro.txt"));
  CHECK(cube.exit_code == 0);
  CHECK(cube.output.find(
            "controllable-witness: f = 1 1 0 ; d1 = {0} ; d2 = {1}\n") !=
        std::string::npos);
}

TEST_CASE("CLI: represent") {
  const auto r = run_cli("represent swap --workspace " + samples("intro.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("h: 1 0\n") != std::string::npos);
  CHECK(r.output.find("verified: true\n") != std::string::npos);
  CHECK(r.output.find("weights-mutually-inverse: true\n") != std::string::npos);
}

TEST_CASE("CLI: code commands and the exit-code contract") {
  const std::string ws = " --workspace " + samples("codes.txt");

  const auto wenum = run_cli("wenum hamming74" + ws);
  CHECK(wenum.exit_code == 0);
  CHECK(wenum.output.find("weights: 1 0 0 7 7 0 0 1\n") != std::string::npos);

  const auto equiv = run_cli("equiv hamming74 hamming74rot" + ws);
  CHECK(equiv.exit_code == 0);
  CHECK(equiv.output.find("equivalent: true\n") != std::string::npos);
  CHECK(equiv.output.find("sigma: ") != std::string::npos);
  CHECK(equiv.output.find("lambda: ") != std::string::npos);
  const auto equiv_again = run_cli("equiv hamming74 hamming74rot" + ws);
  CHECK(equiv_again.output == equiv.output);

  const auto not_equiv = run_cli("equiv even odd" + ws);
  CHECK(not_equiv.exit_code == 3);
  CHECK(not_equiv.output.find("equivalent: false\n") != std::string::npos);
  CHECK(not_equiv.output.find("ERR 3 not-equivalent: ") != std::string::npos);

  const auto missing = run_cli("wenum nope" + ws);
  CHECK(missing.exit_code == 4);
  CHECK(missing.output.find("ERR 4 dangling-reference: ") != std::string::npos);

  const auto bad_file = run_cli("wenum x --workspace /nonexistent.txt");
  CHECK(bad_file.exit_code == 4);
  CHECK(bad_file.output.find("ERR 4 parse: ") != std::string::npos);

  const auto aut = run_cli("aut tetra" + ws);
  CHECK(aut.exit_code == 0);
  CHECK(aut.output.find("automorphisms: ") != std::string::npos);
}

TEST_CASE("CLI: json flag") {
  const auto r = run_cli("analyze full2 --json --workspace " + samples("intro.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.front() == '{');
  CHECK(r.output.find("\"command\":\"analyze\"") != std::string::npos);
  CHECK(r.output.find("\"controllable\":true") != std::string::npos);
}

TEST_CASE("CLI: closure bound from the environment") {
  const std::string command = "SEPCOMP_MAX_CLOSURE=3 " +
                              std::string(SEPCOMP_CLI_PATH) +
                              " analyze full2 --workspace " +
                              samples("intro.txt") + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 4);
  CHECK(output.find("ERR 4 too-large: ") != std::string::npos);
}
