#include "rotcode/rotation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rotcode {
namespace {

std::string digits(std::span<const int> word) {
  std::string out;
  out.reserve(word.size());
  for (int letter : word) {
    if (letter < 0 || letter > 9)
      throw std::invalid_argument("letter does not fit a single digit");
    out.push_back(static_cast<char>('0' + letter));
  }
  return out;
}

}  // namespace

std::string CodedWord::to_string() const { return digits(letters); }

std::string BinaryWord::to_string() const { return digits(bits); }

RotationSystem::RotationSystem(Scalar alpha, std::vector<Scalar> betas)
    : alpha_(std::move(alpha)), betas_(std::move(betas)) {
  if (alpha_.sign() <= 0 || alpha_.compare(Scalar(Rational(1, 2))) >= 0)
    throw std::invalid_argument("alpha out of range");
  const Scalar one(1);
  for (size_t i = 0; i < betas_.size(); ++i) {
    if (betas_[i].sign() <= 0 || betas_[i].compare(one) >= 0)
      throw std::invalid_argument("invalid breakpoints");
    if (i > 0 && betas_[i - 1].compare(betas_[i]) >= 0)
      throw std::invalid_argument("invalid breakpoints");
  }
  // General position: the breakpoints and their alpha-translates are 2m+2
  // pairwise distinct points.
  std::vector<TorusPoint> points;
  points.reserve(2 * betas_.size() + 2);
  for (int k = 0; k <= m(); ++k) {
    TorusPoint b(beta(k));
    points.push_back(b);
    points.push_back(add_mod1(b, alpha_));
  }
  std::sort(points.begin(), points.end());
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i] == points[i + 1]) {
      general_position_ = false;
      break;
    }
  }
}

Scalar RotationSystem::beta(int k) const {
  if (k < 0 || k > m() + 1) throw std::invalid_argument("breakpoint index out of range");
  if (k == 0) return Scalar(0);
  if (k == m() + 1) return Scalar(1);
  return betas_[static_cast<size_t>(k) - 1];
}

TorusInterval RotationSystem::window(int k) const {
  if (k < 0 || k > m()) throw std::invalid_argument("window index out of range");
  TorusPoint start(beta(k));
  return TorusInterval(start, add_mod1(start, alpha_));
}

int RotationSystem::cell_index(const TorusPoint& x) const {
  // Number of breakpoints at or below x; beta_0 = 0 always is.
  auto it = std::upper_bound(betas_.begin(), betas_.end(), x.value(),
                             [](const Scalar& lhs, const Scalar& rhs) { return lhs < rhs; });
  return static_cast<int>(it - betas_.begin());
}

std::vector<TorusPoint> RotationSystem::orbit(const TorusPoint& x, std::size_t n) const {
  std::vector<TorusPoint> points;
  points.reserve(n);
  TorusPoint p = x;
  for (std::size_t j = 0; j < n; ++j) {
    points.push_back(p);
    p = add_mod1(p, alpha_);
  }
  return points;
}

CodedWord RotationSystem::rotation_word(const TorusPoint& x, std::size_t n) const {
  CodedWord word;
  word.letters.reserve(n);
  TorusPoint p = x;
  for (std::size_t j = 0; j < n; ++j) {
    word.letters.push_back(cell_index(p));
    p = add_mod1(p, alpha_);
  }
  return word;
}

BinaryWord RotationSystem::sturmian_word(int ell, const TorusPoint& x, std::size_t n) const {
  const TorusInterval w = window(ell);
  BinaryWord word;
  word.bits.reserve(n);
  TorusPoint p = x;
  for (std::size_t j = 0; j < n; ++j) {
    word.bits.push_back(w.contains(p) ? 1 : 0);
    p = add_mod1(p, alpha_);
  }
  return word;
}

std::vector<std::size_t> factor_complexity(std::span<const int> word, std::size_t max_n) {
  if (max_n > word.size())
    throw std::invalid_argument("max_n exceeds word length");
  // Letters become bytes so each block is a string_view into one buffer.
  std::string buffer(word.size(), '\0');
  for (size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] > 255) throw std::invalid_argument("letter out of byte range");
    buffer[i] = static_cast<char>(word[i]);
  }
  std::vector<std::size_t> counts;
  counts.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::unordered_set<std::string_view> blocks;
    for (std::size_t i = 0; i + n <= buffer.size(); ++i)
      blocks.insert(std::string_view(buffer.data() + i, n));
    counts.push_back(blocks.size());
  }
  return counts;
}

}  // namespace rotcode
