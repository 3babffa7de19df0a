#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotcode/rotation.hpp"
#include "rotcode/scalar.hpp"

namespace rotcode {

enum class Backend { rational, surd };

/// Everything needed to replay one randomized check run.
struct InstanceSpec {
  Backend backend = Backend::rational;
  int m = 0;
  Scalar alpha;
  std::vector<Scalar> betas;
  TorusPoint start;
  std::size_t length = 0;
  std::uint64_t seed = 0;

  RotationSystem system() const;
  std::string to_string() const;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // includes the first offending index on failure
};

struct VerificationReport {
  std::optional<InstanceSpec> instance;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::string to_string() const;
};

/// Draws a valid instance deterministically from the seed: rational systems
/// have alpha, breakpoints and start drawn with denominators at most
/// denominator_bound and are resampled until in range, strictly increasing
/// and in general position; surd systems take alpha from a fixed list of
/// quadratic irrationals in (0, 1/2) and rational breakpoints (general
/// position is then automatic). Throws std::runtime_error when the bound is
/// too tight to ever succeed.
InstanceSpec random_instance(std::uint64_t seed, int m_max, int denominator_bound,
                             Backend backend = Backend::rational, std::size_t length = 1000);

/// Runs every cross-check on one instance:
///   recode_equals_rotation_word  automaton output vs direct coding
///   formula_matches_bruteforce   closed-form cells vs midpoint classification
///   realized_keys_are_arcs       every realized key contiguous, at most 2m+2
///   letters_match_atlas          column letters vs the cell of each orbit point
///   interior_purity              no cut point interior to a nonempty-key cell
/// Identical specs produce identical reports.
VerificationReport verify_instance(const InstanceSpec& spec);

/// Replays the fixed three-word example: recoding the bundled binary words
/// from start state 0 must reproduce "0120201202012020" exactly.
VerificationReport golden_example();

/// The words behind golden_example, exposed for tests and tooling.
std::vector<BinaryWord> golden_words();
extern const char* const kGoldenRecodedWord;

}  // namespace rotcode
