// Command-line front end: exact rotation codings, window codings, cell
// atlases, the universal recoding automaton, and randomized self-checks.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotcode/atlas.hpp"
#include "rotcode/automaton.hpp"
#include "rotcode/circle.hpp"
#include "rotcode/rotation.hpp"
#include "rotcode/scalar.hpp"
#include "rotcode/verifier.hpp"

namespace {

using namespace rotcode;

// Splits a breakpoint list on commas at parenthesis depth zero, so surd
// literals like surd(3/2,-1/2,5) survive intact.
std::vector<Scalar> parse_betas(const std::string& text) {
  std::vector<Scalar> betas;
  if (text.empty()) return betas;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      betas.push_back(Scalar::parse(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  betas.push_back(Scalar::parse(current));
  return betas;
}

RotationSystem make_system(const std::string& alpha_text, const std::string& betas_text) {
  RotationSystem sys(Scalar::parse(alpha_text), parse_betas(betas_text));
  if (!sys.general_position())
    std::cerr << "warning: breakpoints are not in general position\n";
  return sys;
}

std::vector<BinaryWord> read_binary_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<BinaryWord> words;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    BinaryWord word;
    for (char c : line) {
      if (c != '0' && c != '1') throw std::invalid_argument("words must be lines of 0/1 digits");
      word.bits.push_back(c - '0');
    }
    words.push_back(std::move(word));
  }
  if (words.empty()) throw std::invalid_argument(path + " contains no words");
  return words;
}

std::vector<int> read_digit_word(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::string line;
  while (std::getline(in, line) && line.empty()) {
  }
  if (line.empty()) throw std::invalid_argument(path + " contains no word");
  std::vector<int> word;
  for (char c : line) {
    if (c < '0' || c > '9') throw std::invalid_argument("word must be a line of digits");
    word.push_back(c - '0');
  }
  return word;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact codings of circle rotations and their Sturmian recoding"};
  app.require_subcommand(1);

  std::string alpha_text;
  std::string betas_text;
  std::string x_text = "0";
  std::uint64_t n = 0;

  auto add_system_options = [&](CLI::App* cmd, bool with_orbit) {
    cmd->add_option("--alpha", alpha_text, "rotation step, e.g. 3/10 or surd(3/2,-1/2,5)")
        ->required();
    cmd->add_option("--betas", betas_text, "comma-separated breakpoints in (0,1)");
    if (with_orbit) {
      cmd->add_option("--x", x_text, "starting point (default 0)");
      cmd->add_option("--n", n, "word length")->required();
    }
  };

  CLI::App* code = app.add_subcommand("code", "rotation word of the orbit of x");
  add_system_options(code, true);

  int ell = 0;
  CLI::App* sturmian = app.add_subcommand("sturmian", "binary coding by window ell");
  sturmian->add_option("--ell", ell, "window index in [0,m]")->required();
  add_system_options(sturmian, true);

  CLI::App* atlas_cmd = app.add_subcommand("atlas", "cell atlas of window intersections");
  add_system_options(atlas_cmd, false);

  int automaton_m = 0;
  std::string format = "text";
  CLI::App* automaton_cmd = app.add_subcommand("automaton", "universal recoding automaton");
  automaton_cmd->add_option("--m", automaton_m, "number of interior breakpoints")->required();
  automaton_cmd->add_option("--format", format, "dot or text (default text)")
      ->check(CLI::IsMember({"dot", "text"}));

  int recode_m = 0;
  int q0 = -1;
  std::string words_path;
  std::string recode_alpha;
  std::string recode_betas;
  std::string recode_x = "0";
  CLI::App* recode_cmd = app.add_subcommand("recode", "recode m+1 binary words");
  recode_cmd->add_option("--m", recode_m, "number of interior breakpoints")->required();
  recode_cmd->add_option("--q0", q0, "start state");
  recode_cmd->add_option("--words", words_path, "file with m+1 lines of 0/1 digits")->required();
  recode_cmd->add_option("--alpha", recode_alpha, "rotation step (with --x replaces --q0)");
  recode_cmd->add_option("--betas", recode_betas, "breakpoints (with --alpha/--x)");
  recode_cmd->add_option("--x", recode_x, "starting point whose cell becomes the start state");

  std::uint64_t seeds = 0;
  int m_max = 0;
  int den_bound = 64;
  std::uint64_t verify_n = 1000;
  std::string backend_text = "rational";
  CLI::App* verify_cmd = app.add_subcommand("verify", "randomized cross-checks");
  verify_cmd->add_option("--seeds", seeds, "number of random instances")->required();
  verify_cmd->add_option("--m-max", m_max, "largest m to draw")->required();
  verify_cmd->add_option("--den-bound", den_bound, "largest denominator (default 64)");
  verify_cmd->add_option("--n", verify_n, "word length per instance (default 1000)");
  verify_cmd->add_option("--backend", backend_text, "rational or surd (default rational)")
      ->check(CLI::IsMember({"rational", "surd"}));

  std::string input_path;
  std::uint64_t max_n = 0;
  CLI::App* complexity_cmd = app.add_subcommand("complexity", "factor complexity of a word");
  complexity_cmd->add_option("--input", input_path, "file with one digit word")->required();
  complexity_cmd->add_option("--max-n", max_n, "largest block length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*code) {
      RotationSystem sys = make_system(alpha_text, betas_text);
      std::cout << sys.rotation_word(TorusPoint(Scalar::parse(x_text)), n).to_string() << "\n";
    } else if (*sturmian) {
      RotationSystem sys = make_system(alpha_text, betas_text);
      std::cout << sys.sturmian_word(ell, TorusPoint(Scalar::parse(x_text)), n).to_string()
                << "\n";
    } else if (*atlas_cmd) {
      RotationSystem sys = make_system(alpha_text, betas_text);
      std::cout << atlas_bruteforce(sys).to_string();
    } else if (*automaton_cmd) {
      UniversalAutomaton machine = build_automaton(automaton_m);
      std::cout << (format == "dot" ? machine.to_dot() : machine.to_text());
    } else if (*recode_cmd) {
      auto words = read_binary_words(words_path);
      if (static_cast<int>(words.size()) != recode_m + 1)
        throw std::invalid_argument("expected " + std::to_string(recode_m + 1) + " words, got " +
                                    std::to_string(words.size()));
      int start_state = q0;
      if (!recode_alpha.empty()) {
        RotationSystem sys = make_system(recode_alpha, recode_betas);
        if (sys.m() != recode_m)
          throw std::invalid_argument("--betas disagrees with --m");
        start_state = sys.cell_index(TorusPoint(Scalar::parse(recode_x)));
      } else if (q0 < 0) {
        throw std::invalid_argument("provide --q0 or --alpha/--x");
      }
      auto letters = letters_from_columns(words);
      std::cout << recode(build_automaton(recode_m), letters, start_state).to_string() << "\n";
    } else if (*verify_cmd) {
      const Backend backend = backend_text == "surd" ? Backend::surd : Backend::rational;
      std::uint64_t failures = 0;
      for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
        const InstanceSpec spec = random_instance(seed, m_max, den_bound, backend, verify_n);
        const VerificationReport report = verify_instance(spec);
        if (!report.all_passed()) {
          ++failures;
          std::cout << report.to_string();
        }
      }
      std::cout << "summary: " << seeds << " instances, " << failures << " failures\n";
      if (failures > 0) return 1;
    } else if (*complexity_cmd) {
      auto word = read_digit_word(input_path);
      auto counts = factor_complexity(word, max_n);
      for (size_t i = 0; i < counts.size(); ++i) std::cout << (i ? " " : "") << counts[i];
      std::cout << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
