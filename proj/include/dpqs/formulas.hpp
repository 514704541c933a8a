#pragma once

#include "dpqs/rational.hpp"

namespace dpqs {

// Asymptotic expansion over the basis {n, (log n)^2, log n, 1, 1/n} with the
// Euler-Mascheroni constant and log 2 kept symbolic until evaluation
// (natural logarithm throughout; the constants are rendered from 50-digit
// literals).
struct AsymptoticExpansion {
  Rational n_coef;
  Rational lnsq_coef;
  Rational ln_gamma, ln_log2, ln_const;  // coefficient of log n
  Rational c_gamma, c_log2, c_const;     // constant term (zero when unknown)
  Rational invn_coef;

  // Decaying corrections ((a log^2 n + b log n + c)/n), carried by the
  // derived grand expansions whose closed forms have 1/n-weighted sums.
  // Rendered numerically; exact values are assembled in the factories.
  double transient_lnsq_over_n = 0.0;
  double transient_ln_over_n = 0.0;
  double transient_inv_n = 0.0;

  double eval(long n) const;
};

double euler_gamma();
double log2_constant();

// --- Exact closed forms, transcribed as printed. Where a printed formula
// disagrees with the recurrence DP, the evaluator still computes the printed
// value; the deltas are adjudicated by the oracles and carried as findings
// (see report.hpp for the registered ones).

// Grand average, strategy ct, defined for n >= 4.
Rational count_grand_exact(int n);
// Grand average, strategy cv, defined for n >= 4. The weight of the
// harmonic-convolution sum is read as 3/(20n): the source prints 3/20 there,
// but its own asymptotic form and the DP both require the 1/n.
Rational cv_grand_exact(int n);
// Grand average, strategy sf, as printed (its constant term 2/75 is known
// to read 2/(75n); the printed value is kept and the delta is registered).
Rational spf_grand_exact(int n);

// Rank-j cost, strategy ct, j in 1..4.
Rational count_j_exact(int n, int j);
Rational cv_smallest_exact(int n);   // rank 1, strategy cv
Rational spf_smallest_exact(int n);  // rank 1, strategy sf

// Prior-work baselines.
Rational classical_grand(int n);     // n >= 1
Rational classical_smallest(int n);  // n >= 1
Rational yaro_grand(int n);          // n >= 1 (validity threshold below)
Rational yaro_smallest(int n);       // n >= 3

// --- Asymptotic expansions, as printed. The selection-cost expansions'
// log-n coefficients contradict the corresponding exact closed forms (whose
// harmonic-number terms pin the log coefficient); the derived variants below
// carry the oracle values. The partition-cost expansions are correct as
// printed.
AsymptoticExpansion count_grand_expansion();
AsymptoticExpansion cv_grand_expansion();
AsymptoticExpansion count_j_expansion(int j);  // j in 1..4, t_j table
AsymptoticExpansion cv_smallest_expansion();
AsymptoticExpansion spf_grand_expansion_printed();  // log-term sign as printed (disputed)
AsymptoticExpansion spf_smallest_expansion();
AsymptoticExpansion partition_count_expansion();        // (3/2)n + (1/4)log n + const
AsymptoticExpansion partition_clairvoyant_expansion();  // (3/2)n - (1/4)log n + const

// Re-derived log-n coefficients, read off the exact closed forms:
// the H_n coefficient contributes its own log n, the H_k/(n-k) and
// H_k*H_{n-k} sums contribute gamma parts, and the alternating sums
// contribute the log-2 parts.
AsymptoticExpansion count_grand_expansion_derived();
AsymptoticExpansion cv_grand_expansion_derived();
AsymptoticExpansion count_j_expansion_derived(int j);
AsymptoticExpansion cv_smallest_expansion_derived();
AsymptoticExpansion spf_grand_expansion_derived();
AsymptoticExpansion spf_smallest_expansion_derived();

double count_grand_asym(long n);
double cv_grand_asym(long n);
double count_j_asym(long n, int j);
double cv_smallest_asym(long n);
double spf_grand_asym(long n);
double spf_smallest_asym(long n);

// --- Validity thresholds: first n from which the printed formula matches
// the recurrence DP exactly (or, where a formula never matches, the first n
// from which its delta follows the registered discrepancy law). Frozen from
// the empirical scan; tests re-derive them.
inline constexpr int kCountGrandValidFrom = 4;      // modulo registered parity delta
inline constexpr int kCvGrandValidFrom = 4;         // modulo registered parity delta
inline constexpr int kSpfGrandValidFrom = 4;        // modulo registered 2(n-1)/(75n) delta
inline constexpr int kCountJValidFrom[5] = {0, 3, 4, 5, 6};  // index by j
inline constexpr int kCvSmallestValidFrom = 3;
inline constexpr int kSpfSmallestValidFrom = 3;
inline constexpr int kClassicalGrandValidFrom = 1;
inline constexpr int kClassicalSmallestValidFrom = 1;
// Yaroslavskiy baselines: thresholds discovered against enumeration.
inline constexpr int kYaroGrandValidFrom = 4;
inline constexpr int kYaroSmallestValidFrom = 3;

}  // namespace dpqs
