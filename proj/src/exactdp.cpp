#include "dpqs/exactdp.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <type_traits>

namespace dpqs {

namespace {

void require_partition_strategy(StrategyId s) {
  if (s == StrategyId::yar || s == StrategyId::classical)
    throw std::invalid_argument("partition cost DP covers sf/lf/ct/cv only");
}

bool is_counting_strategy(StrategyId s) { return s == StrategyId::ct || s == StrategyId::cv; }

template <typename V>
V from_int(long long x) {
  if constexpr (std::is_same_v<V, Rational>) return Rational(static_cast<long>(x));
  else return static_cast<V>(x);
}

// Per-level expected one-comparison probability, aggregated over the uniform
// split at that level.
//
// ct: after tau classified non-mediums the seen split (a, b) is uniform on
//     a = 0..tau and the next element matches the majority-complement pivot
//     with probability (max(a,b)+1)/(tau+2).
// cv: with t non-mediums remaining (current one included) the remaining
//     split (i, k) is uniform on i = 0..t and the choice is right with
//     probability max(i,k)/t.
template <typename V>
V level_term(StrategyId s, int level) {
  long long num = 0;
  if (s == StrategyId::ct) {
    const int tau = level;
    for (int a = 0; a <= tau; ++a) num += std::max(a, tau - a) + 1;
    return from_int<V>(num) / from_int<V>(static_cast<long long>(tau + 1) * (tau + 2));
  }
  const int t = level;
  for (int i = 0; i <= t; ++i) num += std::max(i, t - i);
  return from_int<V>(num) / from_int<V>(static_cast<long long>(t) * (t + 1));
}

// lucky(r) = expected one-comparison classifications among r non-mediums;
// shell_weighted(n) = sum_{r=0}^{n-2} (r+1) * lucky(r), which is the sum of
// lucky over all class triples of n.
template <typename V>
struct ShellAccumulator {
  StrategyId strategy;
  std::vector<V> lucky{V{}};           // lucky[r]
  std::vector<V> weighted{V{}, V{}};   // weighted[n] = shell_weighted(n), n >= 2 meaningful

  explicit ShellAccumulator(StrategyId s) : strategy(s) {}

  void ensure(int n) {
    while (static_cast<int>(lucky.size()) <= n - 2) {
      const int r = static_cast<int>(lucky.size());
      const int level = strategy == StrategyId::ct ? r - 1 : r;
      lucky.push_back(lucky.back() + level_term<V>(strategy, level));
    }
    while (static_cast<int>(weighted.size()) <= n) {
      const int m = static_cast<int>(weighted.size());
      weighted.push_back(weighted.back() + from_int<V>(m - 1) * lucky[m - 2]);
    }
  }

  V cost(int n) {
    ensure(n);
    const V binom = from_int<V>(static_cast<long long>(n) * (n - 1) / 2);
    return from_int<V>(1 + 2LL * (n - 2)) - weighted[n] / binom;
  }
};

template <typename V>
V shell_cost(StrategyId strategy, int n) {
  static std::mutex mu;
  static ShellAccumulator<V> ct{StrategyId::ct};
  static ShellAccumulator<V> cv{StrategyId::cv};
  std::lock_guard lock(mu);
  return (strategy == StrategyId::ct ? ct : cv).cost(n);
}

struct LatticeState {
  std::mutex mu;
  // prefix[k] = sum over all (s, l) with s + l <= k of lucky_lattice(s, l)
  std::vector<Rational> prefix;
};

}  // namespace

Rational lucky_lattice(StrategyId strategy, int smalls, int larges) {
  if (!is_counting_strategy(strategy))
    throw std::invalid_argument("lucky_lattice: strategy has no decision statistic");
  // f[i][k]: expected one-comparison classifications with i smalls and k
  // larges still unclassified (started from the full (smalls, larges)).
  std::vector<std::vector<Rational>> f(smalls + 1, std::vector<Rational>(larges + 1));
  for (int i = 0; i <= smalls; ++i) {
    for (int k = 0; k <= larges; ++k) {
      if (i + k == 0) continue;
      const Rational p_small(i, i + k);
      const Rational p_large(k, i + k);
      bool choose_q;
      if (strategy == StrategyId::ct) {
        choose_q = (larges - k) > (smalls - i);
      } else {
        choose_q = k > i;
      }
      Rational v = choose_q ? p_large : p_small;
      if (i > 0) v += p_small * f[i - 1][k];
      if (k > 0) v += p_large * f[i][k - 1];
      f[i][k] = v;
    }
  }
  return f[smalls][larges];
}

Rational partition_cost_lattice(StrategyId strategy, int n) {
  if (n < 2) throw std::domain_error("partition_cost: n < 2");
  if (!is_counting_strategy(strategy))
    throw std::invalid_argument("partition_cost_lattice: ct/cv only");

  static LatticeState ct_state, cv_state;
  LatticeState& st = strategy == StrategyId::ct ? ct_state : cv_state;
  std::lock_guard lock(st.mu);
  while (static_cast<int>(st.prefix.size()) <= n - 2) {
    const int k = static_cast<int>(st.prefix.size());
    Rational shell(0);
    for (int s = 0; s <= k; ++s) shell += lucky_lattice(strategy, s, k - s);
    st.prefix.push_back((k == 0 ? Rational(0) : st.prefix.back()) + shell);
  }
  const Rational binom(static_cast<long>(n) * (n - 1) / 2);
  return Rational(1 + 2L * (n - 2)) - st.prefix[n - 2] / binom;
}

Rational partition_cost_shell(StrategyId strategy, int n) {
  if (n < 2) throw std::domain_error("partition_cost: n < 2");
  if (!is_counting_strategy(strategy))
    throw std::invalid_argument("partition_cost_shell: ct/cv only");
  return shell_cost<Rational>(strategy, n);
}

Rational partition_cost(StrategyId strategy, int n) {
  if (n < 2) throw std::domain_error("partition_cost: n < 2");
  require_partition_strategy(strategy);
  if (!is_counting_strategy(strategy)) return Rational(5 * static_cast<long>(n) - 7, 3);
  if (n <= kLatticeCap) return partition_cost_lattice(strategy, n);
  return partition_cost_shell(strategy, n);
}

double partition_cost_float(StrategyId strategy, int n) {
  if (n < 2) throw std::domain_error("partition_cost: n < 2");
  require_partition_strategy(strategy);
  if (!is_counting_strategy(strategy)) return (5.0 * n - 7.0) / 3.0;
  return shell_cost<double>(strategy, n);
}

template <typename V>
CostRecurrence<V>::CostRecurrence(int n_max, std::function<V(int)> partition_cost_fn)
    : n_max_(n_max), pcost_(std::move(partition_cost_fn)) {
  if (n_max < 2) throw std::invalid_argument("CostRecurrence: n_max < 2");
  sum_.assign(n_max + 2, V{});
  wsum_.assign(n_max + 2, V{});
  grid_.assign(n_max + 2, V{});
  diag_.assign(n_max + 1, V{});  // diag_[idx] holds d = idx - (n_max - 1), d in [1-n_max, 0]
}

template <typename V>
void CostRecurrence<V>::fold_seen_counts(const std::vector<V>& row, int s) {
  for (int r = 1; r <= s; ++r) {
    sum_[r] += row[r];
    wsum_[r] += from_int<V>(s) * row[r];
  }
}

template <typename V>
void CostRecurrence<V>::fold_prefix_grids(const std::vector<V>& row, int m) {
  std::vector<V> pref(m + 1);
  for (int t = 1; t <= m; ++t) pref[t] = pref[t - 1] + row[t];
  for (int t = 1; t <= n_max_; ++t) grid_[t] += pref[std::min(t, m)];
  for (int d = 1 - m; d <= 0; ++d) diag_[d + n_max_ - 1] += pref[d + m];
}

template <typename V>
std::span<const V> CostRecurrence<V>::next_row() {
  const int n = n_ + 1;
  if (n > n_max_) throw std::out_of_range("CostRecurrence: past n_max");
  if (n >= 3) fold_seen_counts(prev_, n - 1);
  if (n >= 4) fold_prefix_grids(prev2_, n - 2);

  row_.assign(n + 1, V{});
  const V binom = from_int<V>(static_cast<long long>(n) * (n - 1) / 2);
  const V pn = pcost_(n);
  const V nm1 = from_int<V>(n - 1);
  for (int j = 1; j <= n; ++j) {
    const int r = n - j + 1;
    const V small_part = nm1 * sum_[j] - wsum_[j];
    const V large_part = nm1 * sum_[r] - wsum_[r];
    const V medium_part = grid_[j - 1] - diag_[j - n + n_max_ - 1];
    row_[j] = pn + (small_part + large_part + medium_part) / binom;
  }

  prev2_ = std::move(prev_);
  prev_ = row_;
  n_ = n;
  return std::span<const V>(row_);
}

template <typename V>
CostTable<V>::CostTable(StrategyId strategy, int n_max)
    : strategy_(strategy), n_max_(n_max) {
  std::function<V(int)> pcost;
  if constexpr (std::is_same_v<V, Rational>) {
    pcost = [strategy](int n) { return partition_cost(strategy, n); };
  } else {
    pcost = [strategy](int n) { return partition_cost_float(strategy, n); };
  }
  rows_.resize(n_max + 1);
  grand_.assign(n_max + 1, V{});
  rows_[0] = {};
  if (n_max >= 1) {
    rows_[1] = std::vector<V>(2, V{});
  }
  CostRecurrence<V> rec(n_max, pcost);
  while (rec.current_n() < n_max) {
    const auto row = rec.next_row();
    const int n = rec.current_n();
    rows_[n].assign(row.begin(), row.end());
    V total{};
    for (int j = 1; j <= n; ++j) total += rows_[n][j];
    grand_[n] = total / from_int<V>(n);
  }
}

template <typename V>
const V& CostTable<V>::cost(int n, int j) const {
  if (n < 0 || n > n_max_) throw std::out_of_range("CostTable: n out of range");
  if (j < 1 || j > n) throw std::out_of_range("CostTable: rank out of range");
  return rows_[n][j];
}

template <typename V>
const V& CostTable<V>::grand(int n) const {
  if (n < 0 || n > n_max_) throw std::out_of_range("CostTable: n out of range");
  return grand_[n];
}

namespace {

template <typename V>
class TableCache {
 public:
  const CostTable<V>& get(StrategyId s, int n, int cap) {
    if (n > cap) throw std::out_of_range("cost backend: n beyond configured cap");
    const int idx = index(s);
    std::lock_guard lock(mu_);
    auto& slot = tables_[idx];
    if (!slot || slot->n_max() < n) {
      const int size = std::min(cap, std::max(n, slot ? slot->n_max() * 2 : 16));
      slot = std::make_unique<CostTable<V>>(s, size);
    }
    return *slot;
  }

 private:
  static int index(StrategyId s) {
    switch (s) {
      case StrategyId::sf: return 0;
      case StrategyId::lf: return 1;
      case StrategyId::ct: return 2;
      case StrategyId::cv: return 3;
      default:
        throw std::invalid_argument("cost recurrence covers sf/lf/ct/cv only");
    }
  }
  std::mutex mu_;
  std::unique_ptr<CostTable<V>> tables_[4];
};

TableCache<Rational>& exact_cache() {
  static TableCache<Rational> c;
  return c;
}

TableCache<double>& float_cache() {
  static TableCache<double> c;
  return c;
}

}  // namespace

Rational expected_cost(StrategyId strategy, int n, int j) {
  if (n <= 1) {
    if (n >= 0 && (n == 0 || j == 1)) return Rational(0);
    throw std::out_of_range("expected_cost: rank out of range");
  }
  return exact_cache().get(strategy, n, kExactBackendCap).cost(n, j);
}

Rational grand_average(StrategyId strategy, int n) {
  if (n <= 1) return Rational(0);
  return exact_cache().get(strategy, n, kExactBackendCap).grand(n);
}

double expected_cost_float(StrategyId strategy, int n, int j) {
  if (n <= 1) {
    if (n >= 0 && (n == 0 || j == 1)) return 0.0;
    throw std::out_of_range("expected_cost_float: rank out of range");
  }
  return float_cache().get(strategy, n, kFloatBackendCap).cost(n, j);
}

double grand_average_float(StrategyId strategy, int n) {
  if (n <= 1) return 0.0;
  return float_cache().get(strategy, n, kFloatBackendCap).grand(n);
}

namespace {

template <typename V>
void write_csv_impl(std::ostream& os, const CostTable<V>& table, const char* backend) {
  os << "strategy,n,j,value,backend\n";
  for (int n = 2; n <= table.n_max(); ++n) {
    for (int j = 1; j <= n; ++j) {
      os << to_string(table.strategy()) << ',' << n << ',' << j << ',';
      if constexpr (std::is_same_v<V, Rational>) os << table.cost(n, j).str();
      else os << table.cost(n, j);
      os << ',' << backend << '\n';
    }
    os << to_string(table.strategy()) << ',' << n << ",grand,";
    if constexpr (std::is_same_v<V, Rational>) os << table.grand(n).str();
    else os << table.grand(n);
    os << ',' << backend << '\n';
  }
}

}  // namespace

void write_cost_table_csv(std::ostream& os, const CostTable<Rational>& table) {
  write_csv_impl(os, table, "exact");
}

void write_cost_table_csv(std::ostream& os, const CostTable<double>& table) {
  write_csv_impl(os, table, "float");
}

template class CostRecurrence<Rational>;
template class CostRecurrence<double>;
template class CostTable<Rational>;
template class CostTable<double>;

}  // namespace dpqs
