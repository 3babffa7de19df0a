#include "rotcode/automaton.hpp"

#include <stdexcept>

namespace rotcode {

UniversalAutomaton::UniversalAutomaton(int m, const TransitionRule& rule) : m_(m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  alphabet_.push_back(CellKey::empty_key(m));
  for (int start = 0; start <= m; ++start)
    for (int size = 1; size <= m; ++size) alphabet_.push_back(CellKey::arc(m, start, size));
  alphabet_.push_back(CellKey::full_key(m));

  table_.assign(static_cast<size_t>(m) + 1, std::vector<int>(alphabet_.size()));
  for (int state = 0; state <= m; ++state) {
    for (size_t letter = 0; letter < alphabet_.size(); ++letter) {
      int next = rule(state, alphabet_[letter]);
      if (next < 0 || next > m) throw std::invalid_argument("transition leaves the state set");
      table_[state][letter] = next;
    }
  }
}

int UniversalAutomaton::letter_index(const CellKey& letter) const {
  if (letter.m() != m_) throw std::invalid_argument("letter does not match the automaton");
  if (letter.is_empty()) return 0;
  if (letter.is_full()) return m_ * m_ + m_ + 1;
  return 1 + letter.arc_start() * m_ + (letter.size() - 1);
}

int UniversalAutomaton::transition(int state, const CellKey& letter) const {
  if (state < 0 || state > m_) throw std::invalid_argument("state out of range");
  return table_[state][letter_index(letter)];
}

std::string UniversalAutomaton::to_dot() const {
  std::string out = "digraph universal_m" + std::to_string(m_) + " {\n";
  out += "  rankdir=LR;\n  node [shape=circle];\n";
  for (int state = 0; state <= m_; ++state)
    for (const CellKey& letter : alphabet_)
      out += "  " + std::to_string(state) + " -> " +
             std::to_string(transition(state, letter)) + " [label=\"" + letter.to_string() +
             "\"];\n";
  return out + "}\n";
}

std::string UniversalAutomaton::to_text() const {
  std::string out;
  out += "m " + std::to_string(m_) + "\n";
  out += "states " + std::to_string(state_count()) + "\n";
  out += "letters " + std::to_string(alphabet_.size()) + "\n";
  out += "transitions " + std::to_string(state_count() * alphabet_.size()) + "\n";
  for (int state = 0; state <= m_; ++state)
    for (const CellKey& letter : alphabet_)
      out += std::to_string(state) + " " + letter.to_string() + " " +
             std::to_string(transition(state, letter)) + "\n";
  return out;
}

UniversalAutomaton build_automaton(int m) {
  return UniversalAutomaton(
      m, [m](int state, const CellKey& letter) { return (state + letter.size()) % (m + 1); });
}

std::vector<CellKey> letters_from_columns(std::span<const BinaryWord> words) {
  if (words.empty()) throw std::invalid_argument("at least one word is required");
  const int m = static_cast<int>(words.size()) - 1;
  const size_t length = words[0].size();
  for (const BinaryWord& word : words)
    if (word.size() != length) throw std::invalid_argument("words must have equal length");

  std::vector<CellKey> letters;
  letters.reserve(length);
  std::vector<bool> members(words.size());
  for (size_t j = 0; j < length; ++j) {
    for (size_t ell = 0; ell < words.size(); ++ell) {
      int bit = words[ell].bits[j];
      if (bit != 0 && bit != 1) throw std::invalid_argument("words must be binary");
      members[ell] = bit == 1;
    }
    auto key = CellKey::from_members(m, members);
    if (!key)
      throw std::invalid_argument("inconsistent Sturmian columns at index " + std::to_string(j));
    letters.push_back(*key);
  }
  return letters;
}

CodedWord recode(const UniversalAutomaton& automaton, std::span<const CellKey> letters,
                 int start_state) {
  if (start_state < 0 || start_state > automaton.m())
    throw std::invalid_argument("start state out of range");
  CodedWord word;
  if (letters.empty()) return word;
  word.letters.reserve(letters.size());
  word.letters.push_back(start_state);
  for (size_t j = 1; j < letters.size(); ++j)
    word.letters.push_back(automaton.transition(word.letters.back(), letters[j]));
  return word;
}

std::set<CellKey> realized_alphabet(const RotationSystem& sys) {
  std::set<CellKey> keys;
  for (const auto& [key, intervals] : atlas_bruteforce(sys).cells) keys.insert(key);
  return keys;
}

}  // namespace rotcode
