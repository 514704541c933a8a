#pragma once

#include <span>
#include <vector>

#include "dpqs/rational.hpp"

namespace dpqs {

// Truncated formal power series over Rational. A series of order N carries
// exactly the coefficients of z^0 .. z^N; accessing beyond the order throws
// rather than returning zero. Binary arithmetic truncates to the smaller
// operand order, so a result never claims coefficients that were not fully
// determined by its inputs. Multiplying by z^k (shift_up) genuinely extends
// knowledge and raises the order accordingly.
class TruncSeries {
 public:
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const Rational& operator[](int k) const;
  void set(int k, Rational v);

  std::span<const Rational> coeffs() const { return c_; }

  TruncSeries truncate(int new_order) const;  // new_order <= order
  bool is_zero() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const Rational& s, const TruncSeries& a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  // c * z^p, padded with zeros up to `order`.
  static TruncSeries monomial(Rational c, int p, int order);
  static TruncSeries constant(Rational c, int order) { return monomial(std::move(c), 0, order); }

  // (1 - z)^a for any integer a (negative a gives the binomial series).
  static TruncSeries geom_pow(int a, int order);

  static TruncSeries log_one_minus(int order);  // -sum z^k/k
  static TruncSeries log_one_plus(int order);   // sum (-1)^{k+1} z^k/k
  static TruncSeries artanh(int order);         // sum_{k odd} z^k/k
  static TruncSeries l2(int order);             // -int_0^z log(1+t)/(1-t) dt

 private:
  int order_;
  std::vector<Rational> c_;
};

TruncSeries shift_up(const TruncSeries& s, int k);    // multiply by z^k, k >= 0
TruncSeries shift_down(const TruncSeries& s, int k);  // divide by z^k; throws if low coeffs nonzero
TruncSeries derivative(const TruncSeries& s);
// Term-wise integral from 0; order grows by one (capped when cap >= 0).
TruncSeries integrate(const TruncSeries& s, int cap = -1);
// Substitute z -> -z (sign flip on odd coefficients).
TruncSeries compose_neg(const TruncSeries& s);

// Solution of the second-order ODE for grand selection costs,
//   C''(z) = (1/z) (z^2 P''(z))' + 6/(1-z)^2 C(z),  C(0) = C'(0) = 0:
//   C(z) = (1-z)^3 int_0^z (1-t)^-6 int_0^t (1-s)^3 (1/s)(s^2 P''(s))' ds dt.
// The (1/s) step is a checked coefficient down-shift; a nonzero residue
// signals an invalid P and throws. Result order equals P's order.
TruncSeries solve_quicksort_ode(const TruncSeries& partition_gf);

// Solution of C''(z) - 2/(1-z)^2 C(z) = Q(z), C(0) = C'(0) = 0:
//   C(z) = (1-z)^2 int_0^z (1-t)^-4 int_0^t (1-s)^2 Q(s) ds dt.
// Result order is Q's order + 2.
TruncSeries solve_quickselect_ode(const TruncSeries& inhomogeneity);

}  // namespace dpqs
