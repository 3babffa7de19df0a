// End-to-end tests driving the installed command-line binary through a shell.
// The binary path is baked in at configure time (ROTCODE_CLI_PATH) and can be
// overridden with the ROTCODE_CLI environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "rotcode/rotation.hpp"
#include "rotcode/verifier.hpp"

using namespace rotcode;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr, merged

  bool contains(const std::string& needle) const {
    return output.find(needle) != std::string::npos;
  }
};

std::string cli_path() {
  if (const char* env = std::getenv("ROTCODE_CLI")) return env;
  return ROTCODE_CLI_PATH;
}

RunResult run(const std::string& args) {
  RunResult result;
  std::string command = "'" + cli_path() + "' " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("coding words of the three-cell example") {
  RunResult code = run("code --alpha 3/10 --betas 1/4,3/5 --x 0 --n 10");
  CHECK(code.exit_code == 0);
  CHECK(code.output == "0122012012\n");

  RunResult sturmian = run("sturmian --ell 0 --alpha 3/10 --betas 1/4,3/5 --x 0 --n 10");
  CHECK(sturmian.exit_code == 0);
  CHECK(sturmian.output == "1000100100\n");
}

TEST_CASE("quadratic-irrational steps parse on the command line") {
  RunResult result = run("code --alpha 'surd(3/2,-1/2,5)' --betas 1/2 --x 0 --n 10");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "0010110100\n");

  // The classical two-cell parameters collide with the window translates and
  // earn a warning, but the coding itself is unaffected.
  RunResult warned =
      run("code --alpha 'surd(3/2,-1/2,5)' --betas 'surd(3/2,-1/2,5)' --x 0 --n 10");
  CHECK(warned.exit_code == 0);
  CHECK(warned.contains("warning: breakpoints are not in general position"));
  CHECK(warned.contains("0110110101"));
}

TEST_CASE("atlas listing of the three-cell example") {
  RunResult result = run("atlas --alpha 3/10 --betas 1/4,3/5");
  CHECK(result.exit_code == 0);
  CHECK(result.output ==
        "K={}: [11/20,3/5[ [9/10,1[\n"
        "K={0}: [0,1/4[\n"
        "K={0,1}: [1/4,3/10[\n"
        "K={1}: [3/10,11/20[\n"
        "K={2}: [3/5,9/10[\n");
}

TEST_CASE("automaton renderings") {
  RunResult text = run("automaton --m 1");
  CHECK(text.exit_code == 0);
  CHECK(text.output ==
        "m 1\nstates 2\nletters 4\ntransitions 8\n"
        "0 {} 0\n0 {0} 1\n0 {1} 1\n0 M 0\n"
        "1 {} 1\n1 {0} 0\n1 {1} 0\n1 M 1\n");

  RunResult dot = run("automaton --m 2 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.contains("digraph universal_m2 {"));
  CHECK(dot.contains("0 -> 1 [label=\"{0}\"];"));

  RunResult bad = run("automaton --m 2 --format svg");
  CHECK(bad.exit_code == 2);
  CHECK(bad.contains("error:"));
}

TEST_CASE("recoding from a words file with an explicit start state") {
  auto path = write_temp("rotcode_cli_golden.txt",
                         "1001010010100101\n0100101001010010\n0010100101001010\n");
  RunResult result = run("recode --m 2 --q0 0 --words " + path.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output == "0120201202012020\n");
}

TEST_CASE("recoding with the start state derived from a point") {
  auto path = write_temp("rotcode_cli_worked.txt", "1000100100\n0100010010\n0010001001\n");
  RunResult result =
      run("recode --m 2 --alpha 3/10 --betas 1/4,3/5 --x 0 --words " + path.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output == "0122012012\n");

  RunResult mismatch =
      run("recode --m 1 --alpha 3/10 --betas 1/4,3/5 --x 0 --words " + path.string());
  CHECK(mismatch.exit_code == 2);
  CHECK(mismatch.contains("error:"));

  RunResult no_start = run("recode --m 2 --words " + path.string());
  CHECK(no_start.exit_code == 2);
  CHECK(no_start.contains("--q0"));
}

TEST_CASE("code output round-trips through sturmian and recode") {
  // Every stage goes through the binary: the window words come from the
  // sturmian subcommand, feed recode, and must reproduce the code output.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    InstanceSpec spec = random_instance(seed, 3, 24, Backend::rational, 60);
    std::string system_args = " --alpha " + spec.alpha.to_string() + " --betas ";
    for (size_t i = 0; i < spec.betas.size(); ++i)
      system_args += (i ? "," : "") + spec.betas[i].to_string();
    if (spec.betas.empty()) system_args = " --alpha " + spec.alpha.to_string();
    std::string orbit_args = " --x " + spec.start.value().to_string() + " --n 60";

    std::string lines;
    for (int ell = 0; ell <= spec.m; ++ell) {
      RunResult word = run("sturmian --ell " + std::to_string(ell) + system_args + orbit_args);
      REQUIRE(word.exit_code == 0);
      lines += word.output;
    }
    auto path = write_temp("rotcode_cli_rand.txt", lines);

    RunResult direct = run("code" + system_args + orbit_args);
    REQUIRE(direct.exit_code == 0);
    RunResult recoded = run("recode --m " + std::to_string(spec.m) + system_args + " --x " +
                            spec.start.value().to_string() + " --words " + path.string());
    CHECK(recoded.exit_code == 0);
    CHECK(recoded.output == direct.output);
  }
}

TEST_CASE("randomized self-checks report a summary") {
  RunResult result = run("verify --seeds 25 --m-max 4 --n 150");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "summary: 25 instances, 0 failures\n");

  RunResult surd = run("verify --seeds 5 --m-max 3 --n 150 --backend surd");
  CHECK(surd.exit_code == 0);
  CHECK(surd.output == "summary: 5 instances, 0 failures\n");
}

TEST_CASE("block counts of a word file") {
  auto path = write_temp("rotcode_cli_word.txt", "0122012012\n");
  RunResult result = run("complexity --input " + path.string() + " --max-n 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "3 4 5\n");

  RunResult too_long = run("complexity --input " + path.string() + " --max-n 11");
  CHECK(too_long.exit_code == 2);
  CHECK(too_long.contains("error:"));
}

TEST_CASE("bad inputs exit with code 2 and a diagnostic") {
  RunResult bad_alpha = run("code --alpha 7/10 --x 0 --n 5");
  CHECK(bad_alpha.exit_code == 2);
  CHECK(bad_alpha.contains("error: alpha out of range"));

  RunResult malformed = run("code --alpha 'surd(1,1,4)' --x 0 --n 5");
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.contains("error:"));

  RunResult unknown = run("frobnicate --n 3");
  CHECK(unknown.exit_code == 2);

  RunResult nothing = run("");
  CHECK(nothing.exit_code != 0);

  RunResult missing_file = run("recode --m 2 --q0 0 --words /nonexistent/words.txt");
  CHECK(missing_file.exit_code == 2);
  CHECK(missing_file.contains("cannot open"));
}

TEST_CASE("degenerate breakpoints warn but still code") {
  RunResult warned = run("code --alpha 1/4 --betas 1/4 --x 0 --n 4");
  CHECK(warned.exit_code == 0);
  CHECK(warned.contains("warning: breakpoints are not in general position"));
  CHECK(warned.contains("0111"));

  RunResult atlas_fails = run("atlas --alpha 1/4 --betas 1/4");
  CHECK(atlas_fails.exit_code == 2);
  CHECK(atlas_fails.contains("degenerate breakpoints"));
}

TEST_CASE("help is available") {
  RunResult help = run("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.contains("code"));
  CHECK(help.contains("verify"));
}
