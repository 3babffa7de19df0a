#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rotcode/scalar.hpp"

namespace rotcode {

using CircularSequence = std::vector<TorusPoint>;

/// Circular order: true iff some rotation of the sequence is weakly
/// increasing, equivalently iff the cyclic walk through the points has at
/// most one strict descent. Constant sequences qualify.
bool c_ordered(std::span<const TorusPoint> points);
bool c_ordered(std::initializer_list<TorusPoint> points);

/// Rotates every point by the same offset. Circular order is preserved.
CircularSequence translate(std::span<const TorusPoint> points, const Scalar& offset);

/// Half-open interval [start, end[ on the torus. start == end denotes the
/// empty set (canonicalized to [0,0[); the interval wraps through 0 whenever
/// start > end. The full circle is deliberately not a value of this type.
class TorusInterval {
public:
  TorusInterval() = default;  // empty
  TorusInterval(const TorusPoint& start, const TorusPoint& end);

  bool is_empty() const { return start_ == end_; }
  const TorusPoint& start() const { return start_; }
  const TorusPoint& end() const { return end_; }

  /// end - start mod 1; zero for the empty interval.
  Scalar length() const;

  /// Membership of the half-open arc: the start is in, the end is not.
  bool contains(const TorusPoint& p) const;

  /// [end, start[. The empty interval has no complement here (it would be
  /// the full circle, which this type cannot represent): std::domain_error.
  TorusInterval complement() const;

  bool operator==(const TorusInterval& o) const { return start_ == o.start_ && end_ == o.end_; }
  bool operator!=(const TorusInterval& o) const { return !(*this == o); }

  /// "[a,b[" with a zero end printed as 1, so [9/10,0[ reads "[9/10,1[".
  std::string to_string() const;

private:
  TorusPoint start_;
  TorusPoint end_;
};

/// Intersection of two arcs of the same length. Requires both lengths equal
/// and strictly between 0 and 1/2 (std::invalid_argument otherwise); under
/// that restriction the intersection is always a single, possibly empty,
/// interval, and the case split is decided purely by circular order of the
/// four endpoints.
TorusInterval intersect_same_length(const TorusInterval& lhs, const TorusInterval& rhs);

}  // namespace rotcode
