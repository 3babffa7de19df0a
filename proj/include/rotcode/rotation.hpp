#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rotcode/circle.hpp"
#include "rotcode/scalar.hpp"

namespace rotcode {

/// Word over the alphabet {0, ..., m}.
struct CodedWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool operator==(const CodedWord&) const = default;

  /// Concatenated digits; requires every letter <= 9.
  std::string to_string() const;
};

/// Word over {0, 1}.
struct BinaryWord {
  std::vector<int> bits;

  std::size_t size() const { return bits.size(); }
  bool operator==(const BinaryWord&) const = default;
  std::string to_string() const;
};

/// The rotation x -> x + alpha together with the breakpoints
/// 0 = beta_0 < beta_1 < ... < beta_m < 1. The circle splits two ways:
///   - partition cells B_k = [beta_k, beta_{k+1}[ (with beta_{m+1} = 1),
///     which drive the coded word, and
///   - windows I_k = [beta_k, beta_k + alpha[, one per breakpoint, which
///     drive the binary words.
/// Requires 0 < alpha < 1/2 ("alpha out of range") and strictly increasing
/// breakpoints inside (0,1) ("invalid breakpoints"). The system is in
/// general position when the 2m+2 points beta_k, beta_k + alpha are pairwise
/// distinct; a collision is not an error here, but the cell-atlas operations
/// refuse degenerate systems.
class RotationSystem {
public:
  RotationSystem(Scalar alpha, std::vector<Scalar> betas);

  int m() const { return static_cast<int>(betas_.size()); }
  const Scalar& alpha() const { return alpha_; }
  bool general_position() const { return general_position_; }

  /// beta_k for k in [0, m+1]; beta(0) = 0 and beta(m+1) = 1.
  Scalar beta(int k) const;

  /// I_k = [beta_k, beta_k + alpha[ for k in [0, m].
  TorusInterval window(int k) const;

  /// Index of the partition cell B_k containing x.
  int cell_index(const TorusPoint& x) const;

  /// x, x + alpha, ..., x + (n-1) alpha.
  std::vector<TorusPoint> orbit(const TorusPoint& x, std::size_t n) const;

  /// Letter j is the partition cell of the j-th orbit point.
  CodedWord rotation_word(const TorusPoint& x, std::size_t n) const;

  /// Bit j says whether the j-th orbit point lies in window I_ell.
  BinaryWord sturmian_word(int ell, const TorusPoint& x, std::size_t n) const;

private:
  Scalar alpha_;
  std::vector<Scalar> betas_;
  bool general_position_ = true;
};

/// Number of distinct length-n blocks of the word, for n = 1..max_n.
/// Meaningful only when the word is much longer than max_n; throws
/// std::invalid_argument when max_n exceeds the word length.
std::vector<std::size_t> factor_complexity(std::span<const int> word, std::size_t max_n);

}  // namespace rotcode
