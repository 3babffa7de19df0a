#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotcode/circle.hpp"
#include "rotcode/rotation.hpp"

namespace rotcode {

/// A subset of {0, ..., m} that is circularly contiguous: the empty set, the
/// full set, or a proper arc {k, k+1, ..., l-1} taken mod m+1. Proper arcs
/// are canonicalized by their start (the unique member whose predecessor is
/// outside) and size.
class CellKey {
public:
  static CellKey empty_key(int m);
  static CellKey full_key(int m);
  static CellKey arc(int m, int start, int size);

  /// Canonicalizes an arbitrary membership vector; nullopt unless the set is
  /// circularly contiguous.
  static std::optional<CellKey> from_members(int m, const std::vector<bool>& members);

  int m() const { return m_; }
  int modulus() const { return m_ + 1; }
  int size() const { return size_; }
  bool is_empty() const { return size_ == 0; }
  bool is_full() const { return size_ == modulus(); }
  bool is_proper_arc() const { return !is_empty() && !is_full(); }
  bool contains(int k) const;

  /// Valid for proper arcs only.
  int arc_start() const;

  /// Members in arc order starting at arc_start (ascending for empty/full).
  std::vector<int> members() const;

  /// "{}", "M", or the member list in arc order, e.g. "{2,0}".
  std::string to_string() const;

  /// Canonical order: empty, proper arcs by (start, size), full.
  int compare(const CellKey& o) const;
  bool operator==(const CellKey& o) const { return compare(o) == 0; }
  bool operator!=(const CellKey& o) const { return compare(o) != 0; }
  bool operator<(const CellKey& o) const { return compare(o) < 0; }

private:
  CellKey(int m, int start, int size) : m_(m), start_(start), size_(size) {}

  int m_;
  int start_;
  int size_;
};

/// The decomposition of the circle by window membership: cell X_K collects
/// the points lying in exactly the windows named by K. Nonempty-key cells
/// are single intervals; only X_EMPTY can scatter into several.
struct Atlas {
  int m = 0;
  /// The 2m+2 cut points beta_k, beta_k + alpha, sorted (first is 0).
  std::vector<TorusPoint> atomic_points;
  /// The 2m+2 intervals between consecutive cut points.
  std::vector<TorusInterval> atoms;
  /// Key of each atom, parallel to atoms.
  std::vector<CellKey> atom_keys;
  /// Realized keys with their cell components in circle order.
  std::map<CellKey, std::vector<TorusInterval>> cells;

  /// Key of the atom containing p.
  const CellKey& key_at(const TorusPoint& p) const;

  /// One line per realized key in canonical key order:
  /// "K={1}: [3/10,11/20[" with multi-component cells space-separated.
  std::string to_string() const;
};

/// Cuts the circle at the 2m+2 points beta_k, beta_k + alpha. Requires
/// general position ("degenerate breakpoints").
std::vector<TorusInterval> atomic_partition(const RotationSystem& sys);

/// Classifies the midpoint of every atomic interval against all windows and
/// groups atoms by key. Independent of the closed formula below.
Atlas atlas_bruteforce(const RotationSystem& sys);

/// Closed form for the cell of a proper arc {k,...,l-1}:
///   X_K = [beta_{l-1}, beta_k + alpha[  intersect  [beta_{k-1} + alpha, beta_l[
/// with indices mod m+1. May be empty. When the raw intersection splits in
/// two, the key cannot be realized at all and the result is empty. Keys
/// EMPTY and FULL have no such formula ("formula not applicable").
TorusInterval cell_formula(const RotationSystem& sys, const CellKey& key);

/// Exhaustive check over all index quadruples: for every realized nonempty
/// key K, a circularly ordered quadruple of breakpoints alternating
/// members and non-members of K does not exist.
bool check_no_interleaving(const RotationSystem& sys);

}  // namespace rotcode
