#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dpqs {

// Exact rational number, always in canonical form: gcd(|num|, den) = 1 and
// den >= 1. Backed by GMP. Values are immutable in spirit: every operation
// returns a fresh canonical value, so sharing across threads is safe.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}           // NOLINT: implicit by design, formulas
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) {}

  // Accepts "num/den" or a bare integer "num"; whitespace is not allowed.
  static Rational parse(std::string_view text);

  // Canonical serialization, always with an explicit denominator: "25/12",
  // "-5/6", "3/1", "0/1".
  std::string str() const;

  double to_double() const { return v_.get_d(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace dpqs
