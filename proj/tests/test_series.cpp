#include <doctest.h>

#include "dpqs/harmonic.hpp"
#include "dpqs/series.hpp"

using namespace dpqs;

TEST_SUITE_BEGIN("series");

TEST_CASE("order discipline") {
  TruncSeries a(5), b(9);
  CHECK((a + b).order() == 5);
  CHECK((a * b).order() == 5);
  CHECK_THROWS_AS(a[6], std::out_of_range);
  CHECK(shift_up(a, 3).order() == 8);
  CHECK(integrate(a).order() == 6);
  CHECK(integrate(a, 4).order() == 4);
  CHECK(derivative(a).order() == 4);
}

TEST_CASE("polynomial product") {
  // (1 + z)(1 - z) = 1 - z^2
  TruncSeries p(4), q(4);
  p.set(0, 1); p.set(1, 1);
  q.set(0, 1); q.set(1, -1);
  const TruncSeries r = p * q;
  CHECK(r[0] == Rational(1));
  CHECK(r[1] == Rational(0));
  CHECK(r[2] == Rational(-1));
  CHECK(r[3] == Rational(0));
}

TEST_CASE("geometric powers") {
  const TruncSeries m3 = TruncSeries::geom_pow(-3, 6);
  CHECK(m3[2] == Rational(6));  // C(4,2)
  const TruncSeries p3 = TruncSeries::geom_pow(3, 6);
  CHECK(p3[4] == Rational(0));
  CHECK(p3[3] == Rational(-1));
  const TruncSeries m2 = TruncSeries::geom_pow(-2, 12);
  for (int n = 0; n <= 12; ++n) CHECK(m2[n] == Rational(n + 1));
  // scale: (3/2) * 1/(1-z)^2 has coefficient (3/2)(n+1)
  const TruncSeries scaled = Rational(3, 2) * m2;
  for (int n = 0; n <= 12; ++n) CHECK(scaled[n] == Rational(3, 2) * Rational(n + 1));
}

TEST_CASE("logs and artanh") {
  const TruncSeries lm = TruncSeries::log_one_minus(8);
  CHECK(lm[3] == Rational(-1, 3));
  const TruncSeries at = TruncSeries::artanh(8);
  CHECK(at[3] == Rational(1, 3));
  CHECK(at[2] == Rational(0));
  // artanh = (log(1+z) - log(1-z)) / 2
  const TruncSeries half_diff =
      Rational(1, 2) * (TruncSeries::log_one_plus(8) - TruncSeries::log_one_minus(8));
  CHECK(at == half_diff);
}

TEST_CASE("shift and integrate") {
  const TruncSeries inv = TruncSeries::geom_pow(-1, 8);
  const TruncSeries shifted = shift_up(inv, 2);  // z^2/(1-z)
  CHECK(shifted[1] == Rational(0));
  CHECK(shifted[2] == Rational(1));
  CHECK_THROWS_AS(shift_down(inv, 1), std::domain_error);  // constant term 1

  // integrate 1/(1-z) = -log(1-z)
  const TruncSeries integ = integrate(inv);
  const TruncSeries neg_lm = Rational(-1) * TruncSeries::log_one_minus(9);
  CHECK(integ == neg_lm);

  // constant 1 -> z; z^2 -> z^3/3
  CHECK(integrate(TruncSeries::constant(1, 3))[1] == Rational(1));
  CHECK(integrate(TruncSeries::monomial(1, 2, 3))[3] == Rational(1, 3));

  // d/dz after integrate is the identity (with one order lost)
  TruncSeries s(6);
  for (int k = 0; k <= 6; ++k) s.set(k, Rational(2 * k + 1, k + 2));
  CHECK(derivative(integrate(s)) == s);
}

TEST_CASE("l2 coefficients follow the alternating-harmonic law") {
  const TruncSeries l2 = TruncSeries::l2(64);
  CHECK(l2[1] == Rational(0));
  CHECK(l2[2] == Rational(-1, 2));
  for (int m = 1; m <= 64; ++m) CHECK(l2[m] == alt_harmonic(m - 1) / Rational(m));
}

TEST_CASE("l2 reflection identity") {
  const int order = 128;
  const TruncSeries l2 = TruncSeries::l2(order);
  const TruncSeries lhs = compose_neg(l2);
  const TruncSeries rhs = Rational(-1) * l2 + TruncSeries::log_one_plus(order) *
                                                  TruncSeries::log_one_minus(order);
  CHECK(lhs == rhs);
}

TEST_CASE("quickselect ode solution and residual") {
  // zero inhomogeneity -> zero solution
  CHECK(solve_quickselect_ode(TruncSeries(16)).is_zero());

  // a nontrivial polynomial inhomogeneity: verify the ODE residual vanishes
  TruncSeries q(20);
  q.set(0, Rational(3, 7));
  q.set(1, Rational(-2));
  q.set(4, Rational(5, 3));
  q.set(9, Rational(1, 11));
  const TruncSeries c = solve_quickselect_ode(q);
  CHECK(c[0] == Rational(0));
  CHECK(c[1] == Rational(0));
  const TruncSeries c2 = derivative(derivative(c));
  const int order = std::min(c2.order(), q.order());
  const TruncSeries residual =
      c2.truncate(order) -
      Rational(2) * (TruncSeries::geom_pow(-2, order) * c.truncate(order)) -
      q.truncate(order);
  CHECK(residual.is_zero());
}

TEST_CASE("quicksort ode on the zero input") {
  CHECK(solve_quicksort_ode(TruncSeries(16)).is_zero());
}

TEST_SUITE_END();
