#include <doctest.h>

#include "dpqs/harmonic.hpp"
#include "dpqs/rational.hpp"
#include "dpqs/series.hpp"

using namespace dpqs;

TEST_SUITE_BEGIN("rational");

TEST_CASE("canonical form and arithmetic") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK((Rational(1, 3) - Rational(1, 3)).is_zero());
  CHECK((Rational(3, 2) * Rational(2, 9)) == Rational(1, 3));
  CHECK((Rational(1, 2) / Rational(3, 4)) == Rational(2, 3));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("parse round trip") {
  CHECK(Rational::parse("25/12") == Rational(25, 12));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("6/2").str() == "3/1");  // canonicalized on output
  CHECK(Rational::parse("-5/6").str() == "-5/6");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("a/b"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == Rational(0));
  CHECK(harmonic(2) == Rational(3, 2));
  CHECK(harmonic(4) == Rational(25, 12));
  // H_n - H_{n-1} = 1/n
  for (int n = 1; n <= 40; ++n) CHECK(harmonic(n) - harmonic(n - 1) == Rational(1, n));
}

TEST_CASE("alternating harmonic numbers") {
  CHECK(alt_harmonic(0) == Rational(0));
  CHECK(alt_harmonic(1) == Rational(-1));
  CHECK(alt_harmonic(2) == Rational(-1, 2));
  CHECK(alt_harmonic(3) == Rational(-5, 6));
}

TEST_CASE("special sum spot values") {
  CHECK(special_sum(SpecialSum::hh_conv, 2) == Rational(1));  // H_1 * H_1
  CHECK(special_sum(SpecialSum::alt_over_k, 3) == Rational(-2, 3));
  CHECK(special_sum(SpecialSum::recip, 2) == Rational(1));
  CHECK_THROWS_AS(special_sum(SpecialSum::recip, 0), std::domain_error);
}

TEST_CASE("special sums match series coefficients") {
  const int order = 128;
  const TruncSeries lm = TruncSeries::log_one_minus(order);
  const TruncSeries lm_sq = lm * lm;
  const TruncSeries inv1 = TruncSeries::geom_pow(-1, order);
  const TruncSeries inv2 = TruncSeries::geom_pow(-2, order);
  const TruncSeries hh = lm_sq * inv2;   // coefficients sum H_k H_{n-k}
  const TruncSeries hover = lm_sq * inv1;  // coefficients sum H_k/(n-k)
  for (int n = 1; n <= order; ++n) {
    CHECK(special_sum(SpecialSum::hh_conv, n) == hh[n]);
    CHECK(special_sum(SpecialSum::h_over, n) == hover[n]);
  }
  // alternating harmonic generating function: -log(1+z)/(1-z)
  const TruncSeries alt_gf = Rational(-1) * (TruncSeries::log_one_plus(order) * inv1);
  for (int n = 1; n <= order; ++n) CHECK(alt_harmonic(n) == alt_gf[n]);
}

TEST_SUITE_END();
