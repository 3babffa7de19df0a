#include "rotcode/circle.hpp"

#include <stdexcept>

namespace rotcode {

bool c_ordered(std::span<const TorusPoint> points) {
  int descents = 0;
  for (size_t i = 0; i < points.size(); ++i) {
    const TorusPoint& next = points[(i + 1) % points.size()];
    if (points[i].compare(next) > 0 && ++descents > 1) return false;
  }
  return true;
}

bool c_ordered(std::initializer_list<TorusPoint> points) {
  return c_ordered(std::span<const TorusPoint>(points.begin(), points.size()));
}

CircularSequence translate(std::span<const TorusPoint> points, const Scalar& offset) {
  CircularSequence result;
  result.reserve(points.size());
  for (const TorusPoint& p : points) result.push_back(add_mod1(p, offset));
  return result;
}

TorusInterval::TorusInterval(const TorusPoint& start, const TorusPoint& end) {
  if (start != end) {  // [x,x[ is empty for every x; keep one representation
    start_ = start;
    end_ = end;
  }
}

Scalar TorusInterval::length() const {
  return mod1(end_.value() - start_.value());
}

bool TorusInterval::contains(const TorusPoint& p) const {
  if (is_empty() || p == end_) return false;
  return c_ordered({start_, p, end_});
}

TorusInterval TorusInterval::complement() const {
  if (is_empty()) throw std::domain_error("complement of the empty interval is the full circle");
  return TorusInterval(end_, start_);
}

std::string TorusInterval::to_string() const {
  std::string end_text = end_.to_string();
  if (!is_empty() && end_ == TorusPoint()) end_text = "1";
  return "[" + start_.to_string() + "," + end_text + "[";
}

TorusInterval intersect_same_length(const TorusInterval& lhs, const TorusInterval& rhs) {
  const Scalar len = lhs.length();
  if (len != rhs.length())
    throw std::invalid_argument("intersect_same_length: lengths differ");
  if (len.sign() <= 0 || len.compare(Scalar(Rational(1, 2))) >= 0)
    throw std::invalid_argument("intersect_same_length: length must lie in (0, 1/2)");
  if (lhs == rhs) return lhs;

  const TorusPoint& x = lhs.start();
  const TorusPoint& y = lhs.end();
  const TorusPoint& xp = rhs.start();
  const TorusPoint& yp = rhs.end();
  // Disjointness is exactly the circular order start, end, start', end'.
  if (c_ordered({x, y, xp, yp})) return TorusInterval();
  if (c_ordered({x, xp, y, yp})) return TorusInterval(xp, y);
  if (c_ordered({xp, x, yp, y})) return TorusInterval(x, yp);
  throw std::logic_error("equal-length arcs must fall in one of the three cases");
}

}  // namespace rotcode
