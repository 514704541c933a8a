#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "dpqs/rational.hpp"
#include "dpqs/strategies.hpp"

namespace dpqs {

inline constexpr int kExactBackendCap = 128;
inline constexpr int kFloatBackendCap = 4096;
// Largest n served by the per-triple lattice DP; beyond it the exact path
// switches to the aggregated level-sum form (proven equal on the overlap by
// tests).
inline constexpr int kLatticeCap = 72;

// Expected number of one-comparison classifications when a list with
// `smalls` small and `larges` large elements (mediums excluded, they never
// finish in one comparison) is scanned under the strategy. Lattice DP over
// (smalls remaining, larges remaining); the decision statistic is
// seen_large - seen_small for ct and remaining_large - remaining_small for
// cv. Transition probabilities are proportional to the remaining counts.
Rational lucky_lattice(StrategyId strategy, int smalls, int larges);

// Exact expected comparisons of one partition round over a uniform random
// permutation of n >= 2 distinct keys, pivot-ordering comparison included.
// sf/lf have the closed form (5/3)n - 7/3; ct/cv condition on the class
// triple (s, m, l), each triple having probability 1/C(n,2).
Rational partition_cost(StrategyId strategy, int n);

// Same expectation via per-triple lattice DP summation only (ct/cv).
Rational partition_cost_lattice(StrategyId strategy, int n);

// Same expectation reorganized over levels: conditioned on reaching a state
// with t non-medium elements left (or seen), the small/large split is
// uniform on 0..t, which collapses the triple sum to one pass over levels.
Rational partition_cost_shell(StrategyId strategy, int n);

double partition_cost_float(StrategyId strategy, int n);

// Streaming evaluator of the selection-cost recurrence
//   C(n,j) = P_n + S(n,j) + M(n,j) + L(n,j),  C(0,j) = C(1,j) = 0,
// in the zero-extended form (C(n,j) = 0 outside 1 <= j <= n), which makes
// all three partial sums uniform prefix sums. Filling every j for all
// n' <= n costs O(n^2) arithmetic operations overall.
template <typename V>
class CostRecurrence {
 public:
  CostRecurrence(int n_max, std::function<V(int)> partition_cost_fn);

  // Computes the row for n = current_n() + 1 and returns it; row[j] for
  // j = 1..n (index 0 unused). The view is valid until the next call.
  std::span<const V> next_row();
  int current_n() const { return n_; }
  int n_max() const { return n_max_; }

 private:
  void fold_seen_counts(const std::vector<V>& row, int s);
  void fold_prefix_grids(const std::vector<V>& row, int m);

  int n_max_;
  std::function<V(int)> pcost_;
  int n_ = 1;
  std::vector<V> sum_, wsum_;      // over rows s < n: sum_[r] = sum C(s,r), wsum_[r] = sum s*C(s,r)
  std::vector<V> grid_, diag_;     // over rows m <= n-2: grid_[t] = sum R_m(t), diag_ at d = j-n
  std::vector<V> row_, prev_, prev2_;
};

// Fully materialized cost table for one strategy.
template <typename V>
class CostTable {
 public:
  CostTable(StrategyId strategy, int n_max);

  StrategyId strategy() const { return strategy_; }
  int n_max() const { return n_max_; }
  const V& cost(int n, int j) const;  // 1 <= j <= n <= n_max
  const V& grand(int n) const;        // (1/n) sum_j cost(n,j); grand(0) = 0

 private:
  StrategyId strategy_;
  int n_max_;
  std::vector<std::vector<V>> rows_;
  std::vector<V> grand_;
};

// Cached table access (exact backend capped at kExactBackendCap, float at
// kFloatBackendCap). Tables grow on demand and are shared; safe across
// threads.
Rational expected_cost(StrategyId strategy, int n, int j);
Rational grand_average(StrategyId strategy, int n);
double expected_cost_float(StrategyId strategy, int n, int j);
double grand_average_float(StrategyId strategy, int n);

// CSV export: columns strategy,n,j,value,backend ("grand" rows use j=grand).
void write_cost_table_csv(std::ostream& os, const CostTable<Rational>& table);
void write_cost_table_csv(std::ostream& os, const CostTable<double>& table);

extern template class CostRecurrence<Rational>;
extern template class CostRecurrence<double>;
extern template class CostTable<Rational>;
extern template class CostTable<double>;

}  // namespace dpqs
