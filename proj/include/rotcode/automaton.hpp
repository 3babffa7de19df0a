#pragma once

#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rotcode/atlas.hpp"
#include "rotcode/rotation.hpp"

namespace rotcode {

/// Deterministic automaton on states {0, ..., m} whose alphabet is every
/// circularly contiguous subset of {0, ..., m}: the m(m+1) proper arcs plus
/// EMPTY and FULL, i.e. m^2 + m + 2 letters. The transition table is built
/// eagerly from a rule so tests can instantiate deliberately broken machines.
class UniversalAutomaton {
public:
  using TransitionRule = std::function<int(int state, const CellKey& letter)>;

  UniversalAutomaton(int m, const TransitionRule& rule);

  int m() const { return m_; }
  int state_count() const { return m_ + 1; }
  std::span<const CellKey> alphabet() const { return alphabet_; }

  int letter_index(const CellKey& letter) const;
  int transition(int state, const CellKey& letter) const;

  /// Graphviz rendering; byte-identical across runs.
  std::string to_dot() const;

  /// Header (m, states, letters, transitions) followed by one line per
  /// transition "state letter successor", sorted by state then letter.
  std::string to_text() const;

private:
  int m_;
  std::vector<CellKey> alphabet_;
  std::vector<std::vector<int>> table_;
};

/// The machine that recodes window codings into the rotation coding: reading
/// letter K from state i leads to i + |K| mod m+1. It does not depend on the
/// rotation parameters, only on m.
UniversalAutomaton build_automaton(int m);

/// Column j of the m+1 binary words, read as the set of window indices with
/// a 1 bit. Every column must be circularly contiguous; a column that is not
/// throws std::invalid_argument naming its index. All words must have equal
/// length.
std::vector<CellKey> letters_from_columns(std::span<const BinaryWord> words);

/// Runs the automaton: output[0] = start_state and output[j] is reached from
/// output[j-1] by letter j. Letter 0 is never consumed -- it encodes the
/// start cell, which the start state already carries.
CodedWord recode(const UniversalAutomaton& automaton, std::span<const CellKey> letters,
                 int start_state);

/// Keys that actually occur as cells of the system; at most 2m+2 of the
/// m^2 + m + 2 candidate letters.
std::set<CellKey> realized_alphabet(const RotationSystem& sys);

}  // namespace rotcode
