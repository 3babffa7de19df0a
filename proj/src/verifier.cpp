#include "rotcode/verifier.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <random>
#include <stdexcept>

#include "rotcode/atlas.hpp"
#include "rotcode/automaton.hpp"

namespace rotcode {

RotationSystem InstanceSpec::system() const { return RotationSystem(alpha, betas); }

std::string InstanceSpec::to_string() const {
  std::string out = "seed=" + std::to_string(seed);
  out += backend == Backend::rational ? " backend=rational" : " backend=surd";
  out += " m=" + std::to_string(m);
  out += " alpha=" + alpha.to_string();
  out += " betas=";
  for (size_t i = 0; i < betas.size(); ++i) out += (i ? "," : "") + betas[i].to_string();
  if (betas.empty()) out += "-";
  out += " x=" + start.to_string();
  out += " n=" + std::to_string(length);
  return out;
}

bool VerificationReport::all_passed() const {
  for (const CheckResult& check : checks)
    if (!check.passed) return false;
  return true;
}

std::string VerificationReport::to_string() const {
  std::string out = instance ? "instance " + instance->to_string() + "\n" : "golden example\n";
  for (const CheckResult& check : checks) {
    out += "  " + check.name + ": " + (check.passed ? "pass" : "FAIL");
    if (!check.detail.empty()) out += " (" + check.detail + ")";
    out += "\n";
  }
  out += all_passed() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

namespace {

// The quadratic irrationals used by the surd backend, all inside (0, 1/2).
const char* const kSurdAlphas[] = {
    "surd(3/2,-1/2,5)",   // (3 - sqrt 5) / 2
    "surd(-1,1,2)",       // sqrt 2 - 1
    "surd(0,1/4,2)",      // sqrt 2 / 4
    "surd(-2,1,5)",       // sqrt 5 - 2
    "surd(-1/2,1/2,3)",   // (sqrt 3 - 1) / 2
    "surd(-1,1/2,7)",     // (sqrt 7 - 2) / 2
};

}  // namespace

InstanceSpec random_instance(std::uint64_t seed, int m_max, int denominator_bound,
                             Backend backend, std::size_t length) {
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  std::mt19937_64 rng(seed);
  auto below = [&rng](long long n) { return static_cast<long long>(rng() % static_cast<std::uint64_t>(n)); };
  // A fraction strictly inside (0,1) with denominator <= bound.
  auto unit_fraction = [&]() {
    long long q = 2 + below(denominator_bound - 1);
    long long p = 1 + below(q - 1);
    return Rational(p, q);
  };

  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    InstanceSpec spec;
    spec.backend = backend;
    spec.seed = seed;
    spec.length = length;
    spec.m = static_cast<int>(below(m_max + 1));

    if (backend == Backend::rational) {
      if (denominator_bound < 3) break;  // no alpha in (0, 1/2) exists
      spec.alpha = Scalar(unit_fraction());
      if (spec.alpha.sign() <= 0 || spec.alpha.compare(Scalar(Rational(1, 2))) >= 0) continue;
    } else {
      if (denominator_bound < 2) break;  // breakpoints need a denominator >= 2
      spec.alpha = Scalar::parse(kSurdAlphas[rng() % std::size(kSurdAlphas)]);
    }

    bool ok = true;
    for (int i = 0; i < spec.m; ++i) spec.betas.emplace_back(unit_fraction());
    std::sort(spec.betas.begin(), spec.betas.end());
    for (size_t i = 0; i + 1 < spec.betas.size(); ++i)
      if (spec.betas[i] == spec.betas[i + 1]) ok = false;
    if (!ok) continue;

    long long q = 1 + below(denominator_bound);
    spec.start = TorusPoint(Scalar(Rational(below(q), q)));

    try {
      if (!spec.system().general_position()) continue;
    } catch (const std::invalid_argument&) {
      continue;
    }
    return spec;
  }
  throw std::runtime_error("resampling exhausted: denominator bound too tight");
}

namespace {

using Check = std::function<CheckResult()>;

CheckResult run_check(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return CheckResult{name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

VerificationReport verify_instance(const InstanceSpec& spec) {
  VerificationReport report;
  report.instance = spec;

  report.checks.push_back(run_check("recode_equals_rotation_word", [&] {
    CheckResult result{"recode_equals_rotation_word", false, ""};
    const RotationSystem sys = spec.system();
    const CodedWord direct = sys.rotation_word(spec.start, spec.length);
    std::vector<BinaryWord> words;
    for (int ell = 0; ell <= sys.m(); ++ell)
      words.push_back(sys.sturmian_word(ell, spec.start, spec.length));
    const auto letters = letters_from_columns(words);
    const CodedWord recoded =
        recode(build_automaton(sys.m()), letters, sys.cell_index(spec.start));
    if (direct == recoded) {
      result.passed = true;
      return result;
    }
    for (size_t j = 0; j < direct.size(); ++j) {
      if (direct.letters[j] != recoded.letters[j]) {
        result.detail = "first mismatch at index " + std::to_string(j);
        break;
      }
    }
    return result;
  }));

  report.checks.push_back(run_check("formula_matches_bruteforce", [&] {
    CheckResult result{"formula_matches_bruteforce", true, ""};
    const RotationSystem sys = spec.system();
    const Atlas atlas = atlas_bruteforce(sys);
    for (int start = 0; start <= sys.m(); ++start) {
      for (int size = 1; size <= sys.m(); ++size) {
        const CellKey key = CellKey::arc(sys.m(), start, size);
        const TorusInterval predicted = cell_formula(sys, key);
        auto it = atlas.cells.find(key);
        if (it != atlas.cells.end()) {
          if (it->second.size() != 1 || predicted != it->second.front()) {
            result.passed = false;
            result.detail = "cell mismatch for K=" + key.to_string();
            return result;
          }
        } else if (!predicted.is_empty()) {
          // Unrealized key: a nonempty formula value must not actually be a
          // piece of that cell.
          Scalar lifted_end = predicted.end() == TorusPoint() ? Scalar(1) : predicted.end().value();
          TorusPoint mid((predicted.start().value() + lifted_end) * Rational(1, 2));
          if (atlas.key_at(mid) == key) {
            result.passed = false;
            result.detail = "unrealized key K=" + key.to_string() + " got a genuine cell";
            return result;
          }
        }
      }
    }
    return result;
  }));

  report.checks.push_back(run_check("realized_keys_are_arcs", [&] {
    CheckResult result{"realized_keys_are_arcs", true, ""};
    const RotationSystem sys = spec.system();
    const Atlas atlas = atlas_bruteforce(sys);
    const int limit = 2 * sys.m() + 2;
    if (static_cast<int>(atlas.cells.size()) > limit) {
      result.passed = false;
      result.detail = std::to_string(atlas.cells.size()) + " realized keys exceed " +
                      std::to_string(limit);
      return result;
    }
    // Re-derive membership per atom and test contiguity independently of the
    // CellKey canonicalization used when the atlas was built.
    for (size_t i = 0; i < atlas.atoms.size(); ++i) {
      const TorusInterval& atom = atlas.atoms[i];
      Scalar lifted_end = atom.end() == TorusPoint() ? Scalar(1) : atom.end().value();
      TorusPoint mid((atom.start().value() + lifted_end) * Rational(1, 2));
      const int mod = sys.m() + 1;
      std::vector<bool> members(mod);
      int count = 0;
      for (int k = 0; k < mod; ++k) {
        members[k] = sys.window(k).contains(mid);
        count += members[k] ? 1 : 0;
      }
      int falling_edges = 0;
      for (int k = 0; k < mod; ++k)
        if (members[k] && !members[(k + 1) % mod]) ++falling_edges;
      const bool contiguous = count == 0 || count == mod || falling_edges == 1;
      if (!contiguous) {
        result.passed = false;
        result.detail = "atom " + std::to_string(i) + " has a non-contiguous key";
        return result;
      }
    }
    return result;
  }));

  report.checks.push_back(run_check("letters_match_atlas", [&] {
    CheckResult result{"letters_match_atlas", true, ""};
    const RotationSystem sys = spec.system();
    const Atlas atlas = atlas_bruteforce(sys);
    std::vector<BinaryWord> words;
    for (int ell = 0; ell <= sys.m(); ++ell)
      words.push_back(sys.sturmian_word(ell, spec.start, spec.length));
    const auto letters = letters_from_columns(words);
    const auto points = sys.orbit(spec.start, spec.length);
    for (size_t j = 0; j < points.size(); ++j) {
      if (letters[j] != atlas.key_at(points[j])) {
        result.passed = false;
        result.detail = "letter/cell mismatch at index " + std::to_string(j);
        return result;
      }
    }
    return result;
  }));

  report.checks.push_back(run_check("interior_purity", [&] {
    CheckResult result{"interior_purity", true, ""};
    const RotationSystem sys = spec.system();
    const Atlas atlas = atlas_bruteforce(sys);
    for (const auto& [key, intervals] : atlas.cells) {
      if (key.is_empty()) continue;
      for (const TorusInterval& cell : intervals) {
        for (const TorusPoint& cut : atlas.atomic_points) {
          if (cell.contains(cut) && cut != cell.start()) {
            result.passed = false;
            result.detail = "cut point " + cut.to_string() + " interior to K=" + key.to_string();
            return result;
          }
        }
      }
    }
    return result;
  }));

  return report;
}

std::vector<BinaryWord> golden_words() {
  const char* const rows[] = {
      "1001010010100101",
      "0100101001010010",
      "0010100101001010",
  };
  std::vector<BinaryWord> words;
  for (const char* row : rows) {
    BinaryWord word;
    for (const char* c = row; *c; ++c) word.bits.push_back(*c - '0');
    words.push_back(std::move(word));
  }
  return words;
}

const char* const kGoldenRecodedWord = "0120201202012020";

VerificationReport golden_example() {
  VerificationReport report;
  report.checks.push_back(run_check("golden_recoding", [&] {
    CheckResult result{"golden_recoding", false, ""};
    const auto words = golden_words();
    const auto letters = letters_from_columns(words);
    const CodedWord recoded = recode(build_automaton(2), letters, 0);
    const std::string got = recoded.to_string();
    if (got == kGoldenRecodedWord) {
      result.passed = true;
      result.detail = got;
    } else {
      result.detail = "got " + got + ", want " + kGoldenRecodedWord;
    }
    return result;
  }));
  return report;
}

}  // namespace rotcode
