#include "rotcode/atlas.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotcode {

CellKey CellKey::empty_key(int m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  return CellKey(m, 0, 0);
}

CellKey CellKey::full_key(int m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  return CellKey(m, 0, m + 1);
}

CellKey CellKey::arc(int m, int start, int size) {
  if (m < 0 || start < 0 || start > m || size < 1 || size > m)
    throw std::invalid_argument("not a proper arc");
  return CellKey(m, start, size);
}

std::optional<CellKey> CellKey::from_members(int m, const std::vector<bool>& members) {
  const int mod = m + 1;
  if (static_cast<int>(members.size()) != mod)
    throw std::invalid_argument("membership vector has wrong size");
  int count = 0;
  for (bool in : members) count += in ? 1 : 0;
  if (count == 0) return empty_key(m);
  if (count == mod) return full_key(m);
  // A proper arc has exactly one falling edge member -> non-member.
  int edges = 0;
  int start = -1;
  for (int i = 0; i < mod; ++i) {
    if (members[i] && !members[(i + 1) % mod]) ++edges;
    if (members[i] && !members[(i + mod - 1) % mod]) start = i;
  }
  if (edges != 1) return std::nullopt;
  return arc(m, start, count);
}

bool CellKey::contains(int k) const {
  if (k < 0 || k >= modulus()) return false;
  return (k - start_ + modulus()) % modulus() < size_;
}

int CellKey::arc_start() const {
  if (!is_proper_arc()) throw std::logic_error("arc_start requires a proper arc");
  return start_;
}

std::vector<int> CellKey::members() const {
  std::vector<int> out;
  out.reserve(size_);
  for (int i = 0; i < size_; ++i) out.push_back((start_ + i) % modulus());
  return out;
}

std::string CellKey::to_string() const {
  if (is_full()) return "M";
  std::string out = "{";
  bool first = true;
  for (int k : members()) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

int CellKey::compare(const CellKey& o) const {
  auto rank = [](const CellKey& k) { return k.is_empty() ? 0 : (k.is_full() ? 2 : 1); };
  if (m_ != o.m_) return m_ < o.m_ ? -1 : 1;
  if (rank(*this) != rank(o)) return rank(*this) < rank(o) ? -1 : 1;
  if (start_ != o.start_) return start_ < o.start_ ? -1 : 1;
  if (size_ != o.size_) return size_ < o.size_ ? -1 : 1;
  return 0;
}

const CellKey& Atlas::key_at(const TorusPoint& p) const {
  // Last cut point at or below p; the first cut point is 0 <= p.
  auto it = std::upper_bound(atomic_points.begin(), atomic_points.end(), p);
  size_t atom = static_cast<size_t>(it - atomic_points.begin()) - 1;
  return atom_keys[atom];
}

std::string Atlas::to_string() const {
  std::string out;
  for (const auto& [key, intervals] : cells) {
    out += "K=" + key.to_string() + ":";
    for (const TorusInterval& piece : intervals) out += " " + piece.to_string();
    out += "\n";
  }
  return out;
}

std::vector<TorusInterval> atomic_partition(const RotationSystem& sys) {
  if (!sys.general_position()) throw std::domain_error("degenerate breakpoints");
  std::vector<TorusPoint> points;
  points.reserve(2 * (sys.m() + 1));
  for (int k = 0; k <= sys.m(); ++k) {
    TorusPoint b(sys.beta(k));
    points.push_back(b);
    points.push_back(add_mod1(b, sys.alpha()));
  }
  std::sort(points.begin(), points.end());
  std::vector<TorusInterval> atoms;
  atoms.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i)
    atoms.emplace_back(points[i], points[(i + 1) % points.size()]);
  return atoms;
}

namespace {

// Midpoint of [a,b[ with the wrap lifted: the only wrapping atom ends at 0,
// which reads as 1 on the lifted line.
TorusPoint atom_midpoint(const TorusInterval& atom) {
  Scalar end = atom.end() == TorusPoint() ? Scalar(1) : atom.end().value();
  return TorusPoint((atom.start().value() + end) * Rational(1, 2));
}

// General intersection of two nonempty arcs as segments of the lifted line
// [0,1]; at most two components survive the stitch at the seam.
std::vector<TorusInterval> intersect_general(const TorusInterval& lhs, const TorusInterval& rhs) {
  if (lhs.is_empty() || rhs.is_empty()) return {};
  using Segment = std::pair<Scalar, Scalar>;
  auto lift = [](const TorusInterval& arc) {
    std::vector<Segment> segments;
    const Scalar s = arc.start().value();
    const Scalar e = arc.end().value();
    if (e.sign() == 0) {
      segments.emplace_back(s, Scalar(1));
    } else if (s < e) {
      segments.emplace_back(s, e);
    } else {
      segments.emplace_back(Scalar(0), e);
      segments.emplace_back(s, Scalar(1));
    }
    return segments;
  };

  std::vector<Segment> pieces;
  for (const Segment& a : lift(lhs)) {
    for (const Segment& b : lift(rhs)) {
      Scalar lo = a.first < b.first ? b.first : a.first;
      Scalar hi = a.second < b.second ? a.second : b.second;
      if (lo < hi) pieces.emplace_back(lo, hi);
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Segment& a, const Segment& b) { return a.first < b.first; });
  // Stitch a piece ending at 1 to a piece starting at 0.
  if (pieces.size() >= 2 && pieces.front().first.sign() == 0 &&
      pieces.back().second == Scalar(1)) {
    pieces.back().second = pieces.front().second;
    pieces.erase(pieces.begin());
  }
  std::vector<TorusInterval> result;
  for (const Segment& piece : pieces)
    result.emplace_back(TorusPoint(piece.first), TorusPoint(piece.second));
  if (result.size() > 2) throw std::logic_error("two arcs cannot meet in more than two arcs");
  return result;
}

}  // namespace

Atlas atlas_bruteforce(const RotationSystem& sys) {
  Atlas atlas;
  atlas.m = sys.m();
  atlas.atoms = atomic_partition(sys);
  for (const TorusInterval& atom : atlas.atoms) atlas.atomic_points.push_back(atom.start());

  std::vector<TorusInterval> windows;
  for (int k = 0; k <= sys.m(); ++k) windows.push_back(sys.window(k));

  for (const TorusInterval& atom : atlas.atoms) {
    const TorusPoint mid = atom_midpoint(atom);
    std::vector<bool> members(windows.size());
    for (size_t k = 0; k < windows.size(); ++k) members[k] = windows[k].contains(mid);
    auto key = CellKey::from_members(sys.m(), members);
    if (!key) throw std::logic_error("realized key is not a circular arc");
    atlas.atom_keys.push_back(*key);
  }

  // Merge runs of atoms sharing a key, including across the seam at 0.
  const size_t count = atlas.atoms.size();
  size_t first_break = count;
  for (size_t i = 0; i < count; ++i) {
    if (atlas.atom_keys[i] != atlas.atom_keys[(i + count - 1) % count]) {
      first_break = i;
      break;
    }
  }
  if (first_break == count) throw std::logic_error("a single cell cannot cover the circle");
  size_t i = first_break;
  do {
    const CellKey& key = atlas.atom_keys[i];
    size_t j = i;
    while (atlas.atom_keys[(j + 1) % count] == key && (j + 1) % count != first_break)
      j = (j + 1) % count;  // extend the run
    atlas.cells[key].emplace_back(atlas.atoms[i].start(), atlas.atoms[j].end());
    i = (j + 1) % count;
  } while (i != first_break);

  for (auto& [key, intervals] : atlas.cells)
    std::sort(intervals.begin(), intervals.end(),
              [](const TorusInterval& a, const TorusInterval& b) { return a.start() < b.start(); });
  return atlas;
}

TorusInterval cell_formula(const RotationSystem& sys, const CellKey& key) {
  if (key.m() != sys.m()) throw std::invalid_argument("key does not match the system");
  if (!key.is_proper_arc()) throw std::invalid_argument("formula not applicable");
  if (!sys.general_position()) throw std::domain_error("degenerate breakpoints");
  const int mod = sys.m() + 1;
  auto beta_point = [&](int idx) { return TorusPoint(sys.beta(((idx % mod) + mod) % mod)); };
  const int k = key.arc_start();
  const int ell = (k + key.size()) % mod;
  const TorusInterval first(beta_point(ell - 1), add_mod1(beta_point(k), sys.alpha()));
  const TorusInterval second(add_mod1(beta_point(k - 1), sys.alpha()), beta_point(ell));
  auto pieces = intersect_general(first, second);
  // A split intersection certifies the key is not realizable: realized cells
  // are always single intervals.
  if (pieces.size() != 1) return TorusInterval();
  return pieces.front();
}

bool check_no_interleaving(const RotationSystem& sys) {
  const Atlas atlas = atlas_bruteforce(sys);
  const int mod = sys.m() + 1;
  std::vector<TorusPoint> beta;
  for (int k = 0; k < mod; ++k) beta.emplace_back(sys.beta(k));

  for (const auto& [key, intervals] : atlas.cells) {
    if (key.is_empty()) continue;
    for (int i1 = 0; i1 < mod; ++i1) {
      if (!key.contains(i1)) continue;
      for (int i3 = 0; i3 < mod; ++i3) {
        if (!key.contains(i3)) continue;
        for (int i2 = 0; i2 < mod; ++i2) {
          if (key.contains(i2)) continue;
          for (int i4 = 0; i4 < mod; ++i4) {
            if (key.contains(i4)) continue;
            if (c_ordered({beta[i1], beta[i2], beta[i3], beta[i4]})) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace rotcode
