#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dpqs/rational.hpp"
#include "dpqs/strategies.hpp"

namespace dpqs {

inline constexpr int kEnumerationBound = 9;

// An expected comparison count: exact (rational) or estimated (mean with a
// standard error from a seeded run).
struct CostValue {
  enum class Kind { exact, estimated };
  Kind kind = Kind::exact;
  Rational exact;
  double mean = 0.0;
  double stderr_of_mean = 0.0;  // +inf for a single trial
  long long trials = 0;
  std::uint64_t seed = 0;
};

// Exact average comparison count over all n! permutations, for rank j or
// (when j is empty) over j uniform on 1..n. Permutations are visited in
// lexicographic order with an exact running sum.
Rational enumerate_exact(int n, std::optional<int> j, StrategyId strategy);

// Seeded estimate over independent uniform permutations. Per-trial sub-seeds
// are derived from (seed, trial index), and the per-trial costs are integers
// accumulated exactly, so the result does not depend on thread count or
// execution order. threads = 0 means available parallelism.
CostValue monte_carlo(int n, std::optional<int> j, StrategyId strategy,
                      long long trials, std::uint64_t seed, int threads = 0);

// One partition round over every permutation of 1..n: conditioned on the
// class-size triple, counts how often each relative order of each produced
// sublist occurs. Uniform means every pattern count within a
// (triple, sublist) cell is equal.
struct RandomnessReport {
  struct Cell {
    int s, m, l;
    int sublist;  // 0 = smalls, 1 = mediums, 2 = larges
    std::vector<long long> pattern_counts;
    bool uniform;
  };
  bool uniform = true;
  std::vector<Cell> cells;
};

RandomnessReport randomness_preservation_check(int n, StrategyId strategy);

}  // namespace dpqs
