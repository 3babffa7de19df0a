#pragma once

#include <string>
#include <string_view>

namespace rotcode {

/// Exact rational p/q, reduced, with q > 0. Intermediate products run in
/// 128-bit arithmetic and are narrowed back with an overflow check, so a
/// result is either exact or a std::overflow_error -- never silently wrong.
class Rational {
public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;

  /// Exact three-way comparison: sign of *this - o.
  int compare(const Rational& o) const;
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return compare(o) < 0; }
  bool operator<=(const Rational& o) const { return compare(o) <= 0; }
  bool operator>(const Rational& o) const { return compare(o) > 0; }
  bool operator>=(const Rational& o) const { return compare(o) >= 0; }

  long long floor() const;
  double to_double() const;

  /// "p" when q = 1, otherwise "p/q".
  std::string to_string() const;

private:
  long long num_ = 0;
  long long den_ = 1;
};

/// An exact number a + b*sqrt(d) with a, b rational and d a square-free
/// integer >= 2. Pure rationals are stored with b = 0, d = 0; constructing a
/// surd with zero coefficient collapses back to the rational form, so every
/// stored surd genuinely carries its radical. Values over different radicands
/// cannot be combined or compared; attempting to throws std::invalid_argument.
///
/// The sign of a + b*sqrt(d) is decided by integer arithmetic alone: when a
/// and b disagree in sign the verdict is the comparison of a^2 against b^2*d.
/// There is no epsilon anywhere.
class Scalar {
public:
  Scalar() = default;
  Scalar(const Rational& r) : a_(r) {}
  Scalar(long long n) : a_(n) {}

  /// a + b*sqrt(d). Requires d >= 2 and square-free.
  static Scalar surd(const Rational& a, const Rational& b, long long d);

  bool is_rational() const { return d_ == 0; }
  const Rational& rational_part() const { return a_; }
  const Rational& surd_coeff() const { return b_; }
  long long radicand() const { return d_; }

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Rational& factor) const;

  /// Exact three-way comparison; throws on incompatible radicands.
  int compare(const Scalar& o) const;
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.compare(y) == 0; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return x.compare(y) != 0; }
  friend bool operator<(const Scalar& x, const Scalar& y) { return x.compare(y) < 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return x.compare(y) <= 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return x.compare(y) > 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return x.compare(y) >= 0; }

  long long floor() const;
  double to_double() const;

  /// Rationals print as "p/q", surds as "surd(a,b,d)".
  std::string to_string() const;

  /// Parses exactly the grammar emitted by to_string: an optionally signed
  /// integer, "p/q", or "surd(a,b,d)" with a, b rational literals. Spaces
  /// between tokens are allowed; anything else is a std::invalid_argument.
  static Scalar parse(std::string_view text);

private:
  Rational a_;
  Rational b_;
  long long d_ = 0;  // 0 marks a pure rational
};

/// Fractional part: v - floor(v), always in [0, 1).
Scalar mod1(const Scalar& v);

/// A point of the torus R/Z, kept normalized to [0, 1).
class TorusPoint {
public:
  TorusPoint() = default;
  explicit TorusPoint(const Scalar& v) : value_(mod1(v)) {}

  const Scalar& value() const { return value_; }
  int compare(const TorusPoint& o) const { return value_.compare(o.value_); }
  friend bool operator==(const TorusPoint& x, const TorusPoint& y) { return x.compare(y) == 0; }
  friend bool operator!=(const TorusPoint& x, const TorusPoint& y) { return x.compare(y) != 0; }
  friend bool operator<(const TorusPoint& x, const TorusPoint& y) { return x.compare(y) < 0; }
  friend bool operator>(const TorusPoint& x, const TorusPoint& y) { return x.compare(y) > 0; }

  double to_double() const { return value_.to_double(); }
  std::string to_string() const { return value_.to_string(); }

private:
  Scalar value_;
};

/// The rotation step: fractional part of p + q.
TorusPoint add_mod1(const TorusPoint& p, const Scalar& q);

}  // namespace rotcode
