#include "dpqs/formulas.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "dpqs/harmonic.hpp"

namespace dpqs {

namespace {

constexpr const char* kGamma50 = "0.57721566490153286060651209008240243104215933593992";
constexpr const char* kLog2_50 = "0.69314718055994530941723212145817656807550013436026";

Rational iverson_odd(int n) { return Rational(n % 2 != 0 ? 1 : 0); }
Rational iverson_even(int n) { return Rational(n % 2 == 0 ? 1 : 0); }
Rational sign_pow(int n) { return Rational(n % 2 == 0 ? 1 : -1); }

void require_min(int n, int min_n, const char* what) {
  if (n < min_n) throw std::domain_error(std::string(what) + ": n below defined range");
}

// Shared printed parity bracket of the two grand-average formulas:
// (22/(1600 n)) * ( (n-1)/(n(n-2)) [n odd] - (n-5)/((n-1)(n-3)) [n even] ).
Rational grand_parity_bracket_printed(int n) {
  const Rational w = Rational(22) / Rational(1600L * n);
  if (n % 2 != 0)
    return w * Rational(n - 1) / Rational(static_cast<long>(n) * (n - 2));
  return -w * Rational(n - 5) / Rational(static_cast<long>(n - 1) * (n - 3));
}

}  // namespace

double euler_gamma() { return std::strtod(kGamma50, nullptr); }
double log2_constant() { return std::strtod(kLog2_50, nullptr); }

double AsymptoticExpansion::eval(long n) const {
  const double g = euler_gamma();
  const double l2 = log2_constant();
  const double ln = std::log(static_cast<double>(n));
  const double nn = static_cast<double>(n);
  const double ln_c = ln_gamma.to_double() * g + ln_log2.to_double() * l2 + ln_const.to_double();
  const double c = c_gamma.to_double() * g + c_log2.to_double() * l2 + c_const.to_double();
  return n_coef.to_double() * nn + lnsq_coef.to_double() * ln * ln + ln_c * ln + c +
         invn_coef.to_double() / nn +
         (transient_lnsq_over_n * ln * ln + transient_ln_over_n * ln + transient_inv_n) / nn;
}

Rational count_grand_exact(int n) {
  require_min(n, 4, "count_grand_exact");
  const Rational hn = harmonic(n);
  const Rational an = alt_harmonic(n);
  return Rational(3L * n) +
         Rational(3, 20L * n) * special_sum(SpecialSum::hh_conv, n) -
         Rational(3, 10L * n) * special_sum(SpecialSum::altw, n) -
         Rational(194, 25) * hn + Rational(9, 25) * an + Rational(1564, 125) -
         Rational(1527, 200) * hn / Rational(n) + Rational(47, 200) * an / Rational(n) +
         Rational(783, 4000L * n) - Rational(9, 50) * sign_pow(n) / Rational(n) +
         grand_parity_bracket_printed(n);
}

Rational cv_grand_exact(int n) {
  require_min(n, 4, "cv_grand_exact");
  const Rational hn = harmonic(n);
  const Rational an = alt_harmonic(n);
  return Rational(3L * n) -
         Rational(3, 20L * n) * special_sum(SpecialSum::hh_conv, n) +
         Rational(3, 10L * n) * special_sum(SpecialSum::altw, n) -
         Rational(196, 25) * hn - Rational(9, 25) * an + Rational(1576, 125) -
         Rational(1593, 200) * hn / Rational(n) - Rational(47, 200) * an / Rational(n) -
         Rational(703, 4000L * n) + Rational(9, 50) * sign_pow(n) / Rational(n) +
         grand_parity_bracket_printed(n);
}

Rational spf_grand_exact(int n) {
  require_min(n, 1, "spf_grand_exact");
  const Rational hn = harmonic(n);
  return Rational(10, 3) * Rational(n) - Rational(44, 5) * hn + Rational(354, 25) -
         Rational(44, 5) * hn / Rational(n) + Rational(2, 75);
}

Rational count_j_exact(int n, int j) {
  const Rational base = Rational(9, 4) * Rational(n) +
                        Rational(1, 12) * special_sum(SpecialSum::h_over, n) -
                        Rational(1, 6) * special_sum(SpecialSum::alt_over_k, n);
  const Rational hn = harmonic(n);
  const Rational an = alt_harmonic(n);
  switch (j) {
    case 1:
      require_min(n, 3, "count_j_exact(j=1)");
      return base - Rational(43, 18) * hn + Rational(1, 18) * an + Rational(5, 108) +
             iverson_odd(n) * Rational(n - 1) / Rational(36L * n * (n - 2)) -
             iverson_even(n) / Rational(36L * (n - 1));
    case 2:
      require_min(n, 4, "count_j_exact(j=2)");
      return base - Rational(8, 9) * hn - Rational(1, 9) * an - Rational(755, 216) -
             Rational(1, 12) * special_sum(SpecialSum::recip, n) +
             Rational(1, 6) * alt_harmonic(n - 1) / Rational(n) -
             Rational(1, 144) * iverson_even(n) / Rational(n - 3) -
             Rational(1, 144) * iverson_odd(n) / Rational(n - 2) +
             Rational(5, 144) * iverson_even(n) / Rational(n - 1) +
             Rational(7, 3) * iverson_even(n) / Rational(n) +
             Rational(325, 144) * iverson_odd(n) / Rational(n);
    case 3:
      require_min(n, 5, "count_j_exact(j=3)");
      return base + Rational(11, 18) * hn - Rational(14, 45) * an - Rational(383, 54) -
             Rational(1, 12) * special_sum(SpecialSum::recip, n) -
             Rational(1, 12) * special_sum(SpecialSum::recip, n - 1) +
             Rational(1, 6) * alt_harmonic(n - 1) / Rational(n) +
             Rational(1, 6) * alt_harmonic(n - 2) / Rational(n - 1) +
             Rational(1, 720) * iverson_odd(n) / Rational(n - 4) +
             Rational(1, 720) * iverson_even(n) / Rational(n - 3) +
             Rational(2, 3) * iverson_even(n) / Rational(n - 2) +
             Rational(541, 720) * iverson_odd(n) / Rational(n - 2) +
             Rational(671, 720) * iverson_even(n) / Rational(n - 1) +
             iverson_odd(n) / Rational(n - 1) +
             Rational(5, 3) * iverson_even(n) / Rational(n) +
             Rational(433, 360) * iverson_odd(n) / Rational(n);
    case 4:
      require_min(n, 6, "count_j_exact(j=4)");
      return base + Rational(19, 9) * hn - Rational(1, 2) * an - Rational(11743, 1080) -
             Rational(1, 4) * special_sum(SpecialSum::recip, n - 1) +
             Rational(1, 2) * alt_harmonic(n - 2) / Rational(n - 1) +
             Rational(1, 720) * iverson_even(n) / Rational(n - 5) -
             Rational(1, 144) * iverson_odd(n) / Rational(n - 4) -
             Rational(13, 36) * iverson_even(n) / Rational(n - 3) -
             Rational(1, 3) * iverson_odd(n) / Rational(n - 3) +
             Rational(7) * iverson_even(n) / Rational(n - 2) +
             Rational(65, 9) * iverson_odd(n) / Rational(n - 2) -
             Rational(1105, 144) * iverson_even(n) / Rational(n - 1) -
             Rational(22, 3) * iverson_odd(n) / Rational(n - 1) +
             Rational(37, 10) * iverson_even(n) / Rational(n) +
             Rational(377, 144) * iverson_odd(n) / Rational(n);
    default:
      throw std::invalid_argument("count_j_exact: j must be in 1..4");
  }
}

Rational cv_smallest_exact(int n) {
  require_min(n, 3, "cv_smallest_exact");
  return Rational(9, 4) * Rational(n) -
         Rational(1, 12) * special_sum(SpecialSum::h_over, n) +
         Rational(1, 6) * special_sum(SpecialSum::alt_over_k, n) -
         Rational(41, 18) * harmonic(n) - Rational(1, 18) * alt_harmonic(n) +
         Rational(1, 108) - Rational(1, 72) * iverson_odd(n) / Rational(n - 2) +
         Rational(1, 36) * iverson_even(n) / Rational(n - 1) -
         Rational(1, 72) * iverson_odd(n) / Rational(n);
}

Rational spf_smallest_exact(int n) {
  require_min(n, 1, "spf_smallest_exact");
  return Rational(5, 2) * Rational(n) - Rational(8, 3) * harmonic(n) + Rational(1, 18);
}

Rational classical_grand(int n) {
  require_min(n, 1, "classical_grand");
  const Rational hn = harmonic(n);
  return Rational(3L * n) - Rational(8) * hn + Rational(13) - Rational(8) * hn / Rational(n);
}

Rational classical_smallest(int n) {
  require_min(n, 1, "classical_smallest");
  return Rational(2L * n) - Rational(2) * harmonic(n);
}

Rational yaro_grand(int n) {
  require_min(n, 1, "yaro_grand");
  const Rational hn = harmonic(n);
  return Rational(19, 6) * Rational(n) - Rational(37, 5) * hn + Rational(1183, 100) -
         Rational(37, 5) * hn / Rational(n) - Rational(71, 300) / Rational(n);
}

Rational yaro_smallest(int n) {
  require_min(n, 3, "yaro_smallest");
  const Rational hn = harmonic(n);
  const Rational nn(n);
  const Rational num = Rational(57) * nn * nn * nn * nn -
                       Rational(48) * nn * nn * nn * hn -
                       Rational(178) * nn * nn * nn +
                       Rational(144) * nn * nn * hn + Rational(135) * nn * nn -
                       Rational(96) * nn * hn - Rational(14) * nn + Rational(24);
  return num / Rational(24L * n * (n - 1) * (n - 2));
}

AsymptoticExpansion count_grand_expansion() {
  AsymptoticExpansion e;
  e.n_coef = 3;
  e.lnsq_coef = Rational(3, 20);
  e.ln_gamma = Rational(1, 10);
  e.ln_log2 = Rational(1, 10);
  e.ln_const = Rational(319, 50);
  return e;
}

AsymptoticExpansion cv_grand_expansion() {
  AsymptoticExpansion e;
  e.n_coef = 3;
  e.lnsq_coef = Rational(-3, 20);
  e.ln_gamma = Rational(-3, 10);
  e.ln_log2 = Rational(-3, 10);
  e.ln_const = Rational(461, 50);
  return e;
}

AsymptoticExpansion count_j_expansion(int j) {
  static const Rational t[5] = {Rational(0), Rational(7, 3), Rational(1),
                                Rational(-3, 10), Rational(-29, 8)};
  if (j < 1 || j > 4) throw std::invalid_argument("count_j_expansion: j in 1..4");
  AsymptoticExpansion e;
  e.n_coef = Rational(9, 4);
  e.lnsq_coef = Rational(1, 12);
  e.ln_gamma = Rational(1, 6);
  e.ln_log2 = Rational(1, 6);
  e.ln_const = t[j];
  return e;
}

AsymptoticExpansion cv_smallest_expansion() {
  AsymptoticExpansion e;
  e.n_coef = Rational(9, 4);
  e.lnsq_coef = Rational(-1, 12);
  e.ln_gamma = Rational(-1, 6);
  e.ln_log2 = Rational(-1, 6);
  e.ln_const = Rational(7, 3);
  return e;
}

AsymptoticExpansion spf_grand_expansion_printed() {
  AsymptoticExpansion e;
  e.n_coef = Rational(10, 3);
  e.ln_const = Rational(44, 5);
  e.c_gamma = Rational(44, 5);
  e.c_const = Rational(-758, 75);
  e.invn_coef = Rational(12, 5);
  return e;
}

AsymptoticExpansion spf_smallest_expansion() {
  AsymptoticExpansion e;
  e.n_coef = Rational(5, 2);
  e.ln_const = Rational(8, 3);
  e.c_gamma = Rational(8, 3);
  e.c_const = Rational(-22, 9);
  e.invn_coef = Rational(-4, 3);
  return e;
}

AsymptoticExpansion partition_count_expansion() {
  AsymptoticExpansion e;
  e.n_coef = Rational(3, 2);
  e.ln_const = Rational(1, 4);
  e.c_gamma = Rational(1, 4);
  e.c_log2 = Rational(1, 4);
  e.c_const = Rational(-19, 8);
  return e;
}

AsymptoticExpansion partition_clairvoyant_expansion() {
  AsymptoticExpansion e;
  e.n_coef = Rational(3, 2);
  e.ln_const = Rational(-1, 4);
  e.c_gamma = Rational(-1, 4);
  e.c_log2 = Rational(-1, 4);
  e.c_const = Rational(-13, 8);
  return e;
}

namespace {

// Transient pieces of the grand closed forms, through (log^2 n)/n:
//   sum H_k H_{n-k} = (n+1)(H_n^2 - H_n^(2)) - 2n H_n + 2n  (exactly), and
//   sum (Halt_{k-1}/k)(n-k+1) = -(n+1) log2 H_n + (n+1) Li2(1/2)
//                               + n log2 - 1/2 + O(1/n),
// with H_n = log n + gamma + 1/(2n) + ..., H_n^(2) = pi^2/6 - 1/n + ....
struct GrandTransients {
  double lnsq, ln, inv;
};

GrandTransients count_grand_transients() {
  const double g = euler_gamma();
  const double l2 = log2_constant();
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  const double li2_half = zeta2 / 2.0 - l2 * l2 / 2.0;
  GrandTransients t;
  t.lnsq = 3.0 / 20.0;
  t.ln = (3.0 / 20.0) * (2.0 * g + 1.0) + (3.0 / 10.0) * l2 - 1527.0 / 200.0;
  t.inv = (3.0 / 20.0) * (g * g + g - zeta2) + (3.0 / 10.0) * g * l2 +
          (3.0 / 20.0) * l2 - (3.0 / 10.0) * li2_half + 3.0 / 20.0 - 97.0 / 25.0 -
          (1527.0 / 200.0) * g - (47.0 / 200.0) * l2 + 783.0 / 4000.0;
  return t;
}

GrandTransients cv_grand_transients() {
  const double g = euler_gamma();
  const double l2 = log2_constant();
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  const double li2_half = zeta2 / 2.0 - l2 * l2 / 2.0;
  GrandTransients t;
  t.lnsq = -3.0 / 20.0;
  t.ln = -(3.0 / 20.0) * (2.0 * g + 1.0) - (3.0 / 10.0) * l2 - 1593.0 / 200.0;
  t.inv = -(3.0 / 20.0) * (g * g + g - zeta2) - (3.0 / 10.0) * g * l2 -
          (3.0 / 20.0) * l2 + (3.0 / 10.0) * li2_half - 3.0 / 20.0 - 98.0 / 25.0 -
          (1593.0 / 200.0) * g + (47.0 / 200.0) * l2 - 703.0 / 4000.0;
  return t;
}

}  // namespace

AsymptoticExpansion count_grand_expansion_derived() {
  AsymptoticExpansion e;
  e.n_coef = 3;
  e.lnsq_coef = Rational(3, 20);
  e.ln_gamma = Rational(3, 10);
  e.ln_log2 = Rational(3, 10);
  e.ln_const = Rational(-403, 50);
  const GrandTransients t = count_grand_transients();
  e.transient_lnsq_over_n = t.lnsq;
  e.transient_ln_over_n = t.ln;
  e.transient_inv_n = t.inv;
  return e;
}

AsymptoticExpansion cv_grand_expansion_derived() {
  AsymptoticExpansion e;
  e.n_coef = 3;
  e.lnsq_coef = Rational(-3, 20);
  e.ln_gamma = Rational(-3, 10);
  e.ln_log2 = Rational(-3, 10);
  e.ln_const = Rational(-377, 50);
  const GrandTransients t = cv_grand_transients();
  e.transient_lnsq_over_n = t.lnsq;
  e.transient_ln_over_n = t.ln;
  e.transient_inv_n = t.inv;
  return e;
}

AsymptoticExpansion count_j_expansion_derived(int j) {
  static const Rational s[5] = {Rational(0), Rational(-43, 18), Rational(-8, 9),
                                Rational(11, 18), Rational(19, 9)};
  if (j < 1 || j > 4) throw std::invalid_argument("count_j_expansion_derived: j in 1..4");
  AsymptoticExpansion e;
  e.n_coef = Rational(9, 4);
  e.lnsq_coef = Rational(1, 12);
  e.ln_gamma = Rational(1, 6);
  e.ln_log2 = Rational(1, 6);
  e.ln_const = s[j];
  return e;
}

AsymptoticExpansion cv_smallest_expansion_derived() {
  AsymptoticExpansion e;
  e.n_coef = Rational(9, 4);
  e.lnsq_coef = Rational(-1, 12);
  e.ln_gamma = Rational(-1, 6);
  e.ln_log2 = Rational(-1, 6);
  e.ln_const = Rational(-41, 18);
  return e;
}

AsymptoticExpansion spf_grand_expansion_derived() {
  AsymptoticExpansion e;
  e.n_coef = Rational(10, 3);
  e.ln_const = Rational(-44, 5);
  e.c_gamma = Rational(-44, 5);
  e.c_const = Rational(354, 25);
  // -(44/5) H_n/n + 2/(75n) and the 1/(2n) tail of -(44/5) H_n
  e.transient_ln_over_n = -44.0 / 5.0;
  e.transient_inv_n = -(44.0 / 5.0) * euler_gamma() - 22.0 / 5.0 + 2.0 / 75.0;
  return e;
}

AsymptoticExpansion spf_smallest_expansion_derived() {
  AsymptoticExpansion e;
  e.n_coef = Rational(5, 2);
  e.ln_const = Rational(-8, 3);
  e.c_gamma = Rational(-8, 3);
  e.c_const = Rational(1, 18);
  e.invn_coef = Rational(-4, 3);
  return e;
}

double count_grand_asym(long n) { return count_grand_expansion().eval(n); }
double cv_grand_asym(long n) { return cv_grand_expansion().eval(n); }
double count_j_asym(long n, int j) { return count_j_expansion(j).eval(n); }
double cv_smallest_asym(long n) { return cv_smallest_expansion().eval(n); }
double spf_grand_asym(long n) { return spf_grand_expansion_printed().eval(n); }
double spf_smallest_asym(long n) { return spf_smallest_expansion().eval(n); }

}  // namespace dpqs
