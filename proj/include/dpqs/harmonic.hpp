#pragma once

#include <string_view>

#include "dpqs/rational.hpp"

namespace dpqs {

// H_n = sum_{k=1..n} 1/k, with H_0 = 0. Cached incrementally; thread-safe.
Rational harmonic(int n);

// Alternating variant: sum_{k=1..n} (-1)^k / k, zero at n = 0.
Rational alt_harmonic(int n);

// Named sums that show up in the exact cost formulas. All are evaluated by
// direct summation over the cached harmonic values.
enum class SpecialSum {
  hh_conv,     // sum_{k=1..n-1} H_k * H_{n-k}
  h_over,      // sum_{k=1..n-1} H_k / (n-k)
  altw,        // sum_{k=1..n}   (Halt_{k-1} / k) * (n-k+1)
  alt_over_k,  // sum_{k=2..n}   Halt_{k-1} / k
  recip,       // sum_{k=1..n-1} 1 / (k (n-k))
};

Rational special_sum(SpecialSum kind, int n);  // n >= 1

}  // namespace dpqs
