#include "dpqs/series.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace dpqs {

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
  c_.assign(order + 1, Rational(0));
}

TruncSeries::TruncSeries(int order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  if (order < 0 || c_.size() != static_cast<size_t>(order) + 1)
    throw std::invalid_argument("TruncSeries: coefficient count does not match order");
}

const Rational& TruncSeries::operator[](int k) const {
  if (k < 0 || k > order_)
    throw std::out_of_range("TruncSeries: coefficient index beyond truncation order");
  return c_[k];
}

void TruncSeries::set(int k, Rational v) {
  if (k < 0 || k > order_)
    throw std::out_of_range("TruncSeries: coefficient index beyond truncation order");
  c_[k] = std::move(v);
}

TruncSeries TruncSeries::truncate(int new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("TruncSeries: truncate cannot extend the order");
  std::vector<Rational> c(c_.begin(), c_.begin() + new_order + 1);
  return TruncSeries(new_order, std::move(c));
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  *this = *this + o;
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  *this = *this - o;
  return *this;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order_, b.order_);
  TruncSeries r(n);
  for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order_, b.order_);
  TruncSeries r(n);
  for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order_, b.order_);
  TruncSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

TruncSeries operator*(const Rational& s, const TruncSeries& a) {
  TruncSeries r(a.order_);
  for (int k = 0; k <= a.order_; ++k) r.c_[k] = s * a.c_[k];
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.order_ == b.order_ && a.c_ == b.c_;
}

TruncSeries TruncSeries::monomial(Rational c, int p, int order) {
  TruncSeries r(order);
  if (p < 0) throw std::invalid_argument("TruncSeries: negative power");
  if (p <= order) r.c_[p] = std::move(c);
  return r;
}

TruncSeries TruncSeries::geom_pow(int a, int order) {
  TruncSeries r(order);
  if (a >= 0) {
    // finite binomial expansion of (1 - z)^a
    Rational c(1);
    for (int k = 0; k <= std::min(a, order); ++k) {
      r.c_[k] = (k % 2 == 0) ? c : -c;
      c *= Rational(a - k, k + 1);
    }
  } else {
    const int m = -a;  // (1 - z)^{-m}: coefficient C(m - 1 + k, k)
    Rational c(1);
    for (int k = 0; k <= order; ++k) {
      r.c_[k] = c;
      c *= Rational(m + k, k + 1);
    }
  }
  return r;
}

TruncSeries TruncSeries::log_one_minus(int order) {
  TruncSeries r(order);
  for (int k = 1; k <= order; ++k) r.c_[k] = Rational(-1, k);
  return r;
}

TruncSeries TruncSeries::log_one_plus(int order) {
  TruncSeries r(order);
  for (int k = 1; k <= order; ++k) r.c_[k] = Rational(k % 2 == 1 ? 1 : -1, k);
  return r;
}

TruncSeries TruncSeries::artanh(int order) {
  TruncSeries r(order);
  for (int k = 1; k <= order; k += 2) r.c_[k] = Rational(1, k);
  return r;
}

TruncSeries TruncSeries::l2(int order) {
  if (order == 0) return TruncSeries(0);
  const TruncSeries integrand = log_one_plus(order - 1) * geom_pow(-1, order - 1);
  return Rational(-1) * integrate(integrand, order);
}

TruncSeries shift_up(const TruncSeries& s, int k) {
  if (k < 0) throw std::invalid_argument("shift_up: negative power");
  TruncSeries r(s.order() + k);
  for (int i = 0; i <= s.order(); ++i) r.set(i + k, s[i]);
  return r;
}

TruncSeries shift_down(const TruncSeries& s, int k) {
  if (k < 0) throw std::invalid_argument("shift_down: negative power");
  if (k > s.order()) throw std::invalid_argument("shift_down: shift exceeds order");
  for (int i = 0; i < k; ++i)
    if (!s[i].is_zero())
      throw std::domain_error("shift_down: nonzero residue below the shifted power");
  TruncSeries r(s.order() - k);
  for (int i = k; i <= s.order(); ++i) r.set(i - k, s[i]);
  return r;
}

TruncSeries derivative(const TruncSeries& s) {
  if (s.order() == 0) return TruncSeries(0);
  TruncSeries r(s.order() - 1);
  for (int k = 1; k <= s.order(); ++k) r.set(k - 1, Rational(k) * s[k]);
  return r;
}

TruncSeries integrate(const TruncSeries& s, int cap) {
  int n = s.order() + 1;
  if (cap >= 0) n = std::min(n, cap);
  TruncSeries r(n);
  for (int k = 0; k + 1 <= n; ++k) r.set(k + 1, s[k] / Rational(k + 1));
  return r;
}

TruncSeries compose_neg(const TruncSeries& s) {
  TruncSeries r(s.order());
  for (int k = 0; k <= s.order(); ++k) r.set(k, k % 2 == 0 ? s[k] : -s[k]);
  return r;
}

TruncSeries solve_quicksort_ode(const TruncSeries& partition_gf) {
  const TruncSeries p2 = derivative(derivative(partition_gf));
  // (1/s)(s^2 P'')': the constant term of (s^2 P'')' vanishes because s^2 P''
  // starts at s^2; shift_down checks that and throws otherwise.
  TruncSeries inner = shift_down(derivative(shift_up(p2, 2)), 1);
  inner = inner * TruncSeries::geom_pow(3, inner.order());
  TruncSeries mid = integrate(inner);
  mid = mid * TruncSeries::geom_pow(-6, mid.order());
  TruncSeries outer = integrate(mid);
  return outer * TruncSeries::geom_pow(3, outer.order());
}

TruncSeries solve_quickselect_ode(const TruncSeries& inhomogeneity) {
  TruncSeries inner = inhomogeneity * TruncSeries::geom_pow(2, inhomogeneity.order());
  TruncSeries mid = integrate(inner);
  mid = mid * TruncSeries::geom_pow(-4, mid.order());
  TruncSeries outer = integrate(mid);
  TruncSeries c = outer * TruncSeries::geom_pow(2, outer.order());
  assert(c.order() < 0 || c[0].is_zero());
  assert(c.order() < 1 || c[1].is_zero());
  return c;
}

}  // namespace dpqs
