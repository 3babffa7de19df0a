#include "rotcode/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace rotcode {
namespace {

using int128 = __int128;

[[noreturn]] void overflow() { throw std::overflow_error("exact arithmetic overflow"); }

int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) overflow();
  return r;
}

long long narrow(int128 v) {
  long long r = static_cast<long long>(v);
  if (static_cast<int128>(r) != v) overflow();
  return r;
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces a 128-bit numerator/denominator pair in place.
void reduce(int128& num, int128& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational make_rational(int128 num, int128 den) {
  reduce(num, den);
  return Rational(narrow(num), narrow(den));  // already coprime; ctor gcd no-ops
}

int sign128(int128 v) { return (v > 0) - (v < 0); }

bool is_square_free(long long d) {
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return false;
    }
  }
  return true;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  int128 n = num;
  int128 d = den;
  reduce(n, d);
  num_ = narrow(n);
  den_ = narrow(d);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
  return make_rational(
      checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
      checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return make_rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

int Rational::compare(const Rational& o) const {
  return sign128(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)));
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ < 0) --q;
  return q;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::surd(const Rational& a, const Rational& b, long long d) {
  if (d < 2) throw std::invalid_argument("surd radicand must be >= 2");
  if (!is_square_free(d)) throw std::invalid_argument("surd radicand must be square-free");
  if (b.is_zero()) return Scalar(a);
  Scalar s;
  s.a_ = a;
  s.b_ = b;
  s.d_ = d;
  return s;
}

int Scalar::sign() const {
  if (b_.is_zero()) return a_.sign();
  if (a_.is_zero()) return b_.sign();
  int sa = a_.sign();
  int sb = b_.sign();
  if (sa == sb) return sa;
  // Opposite signs: the verdict is |a| vs |b|*sqrt(d), i.e. a^2 vs b^2*d.
  int128 lhs = checked_mul(checked_mul(a_.num(), a_.num()),
                           checked_mul(b_.den(), b_.den()));
  int128 rhs = checked_mul(checked_mul(checked_mul(b_.num(), b_.num()),
                                       checked_mul(a_.den(), a_.den())),
                           d_);
  // Equality would make sqrt(d) rational, impossible for square-free d >= 2.
  if (lhs == rhs) throw std::logic_error("sqrt(d) cannot be rational");
  return lhs > rhs ? sa : sb;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.a_ = -a_;
  s.b_ = -b_;
  s.d_ = d_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  long long d = d_;
  if (d == 0) {
    d = o.d_;
  } else if (o.d_ != 0 && o.d_ != d) {
    throw std::invalid_argument("incompatible surd radicands");
  }
  Rational b = b_ + o.b_;
  if (b.is_zero()) return Scalar(a_ + o.a_);
  Scalar s;
  s.a_ = a_ + o.a_;
  s.b_ = b;
  s.d_ = d;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Rational& factor) const {
  if (factor.is_zero()) return Scalar();
  Scalar s;
  s.a_ = a_ * factor;
  s.b_ = b_ * factor;
  s.d_ = b_.is_zero() ? 0 : d_;
  return s;
}

int Scalar::compare(const Scalar& o) const { return (*this - o).sign(); }

long long Scalar::floor() const {
  if (is_rational()) return a_.floor();
  long long n = static_cast<long long>(std::floor(to_double()));
  // The estimate is off by at most one; fix it up with exact comparisons.
  while (compare(Scalar(n)) < 0) --n;
  while (compare(Scalar(n + 1)) >= 0) ++n;
  return n;
}

double Scalar::to_double() const {
  double v = a_.to_double();
  if (d_ != 0) v += b_.to_double() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string Scalar::to_string() const {
  if (is_rational()) return a_.to_string();
  return "surd(" + a_.to_string() + "," + b_.to_string() + "," + std::to_string(d_) + ")";
}

namespace {

// Minimal recursive-descent reader for the scalar literal grammar.
struct Reader {
  std::string_view text;
  size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_spaces();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail() const {
    throw std::invalid_argument("malformed scalar literal: " + std::string(text));
  }

  long long integer() {
    skip_spaces();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail();
    long long value = 0;
    auto first = text.data() + start;
    if (text[start] == '+') ++first;  // from_chars rejects a leading '+'
    auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
    if (ec != std::errc() || ptr != text.data() + pos) fail();
    return value;
  }

  Rational rational() {
    long long num = integer();
    if (eat('/')) {
      long long den = integer();
      if (den == 0) fail();
      return Rational(num, den);
    }
    return Rational(num);
  }

  Scalar scalar() {
    skip_spaces();
    if (text.compare(pos, 4, "surd") == 0) {
      pos += 4;
      if (!eat('(')) fail();
      Rational a = rational();
      if (!eat(',')) fail();
      Rational b = rational();
      if (!eat(',')) fail();
      long long d = integer();
      if (!eat(')')) fail();
      if (d < 2 || !is_square_free(d)) fail();
      return Scalar::surd(a, b, d);
    }
    return Scalar(rational());
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Reader reader{text};
  Scalar value = reader.scalar();
  reader.skip_spaces();
  if (reader.pos != text.size()) reader.fail();
  return value;
}

Scalar mod1(const Scalar& v) { return v - Scalar(v.floor()); }

TorusPoint add_mod1(const TorusPoint& p, const Scalar& q) {
  return TorusPoint(p.value() + q);
}

}  // namespace rotcode
