#include "dpqs/simkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dpqs/selector.hpp"

namespace dpqs {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

long long run_select(const std::vector<Key>& keys, int j, StrategyId strategy) {
  return strategy == StrategyId::classical ? select_classical(keys, j).comparisons
                                           : select(keys, j, strategy).comparisons;
}

// splitmix64; per-trial streams are seeded through the finalizer so results
// are reproducible bit for bit on any platform.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // unbiased bounded draw by rejection
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }
};

std::uint64_t trial_seed(std::uint64_t seed, long long trial) {
  SplitMix64 g{seed ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(trial + 1))};
  g.next();
  return g.next();
}

void fill_shuffled(std::vector<Key>& keys, SplitMix64& rng) {
  std::iota(keys.begin(), keys.end(), 1);
  for (std::uint64_t i = keys.size(); i > 1; --i)
    std::swap(keys[i - 1], keys[rng.below(i)]);
}

int pattern_index(std::span<const Key> sub) {
  // Lehmer code of the relative order of `sub`.
  int idx = 0;
  for (size_t i = 0; i < sub.size(); ++i) {
    int smaller_after = 0;
    for (size_t k = i + 1; k < sub.size(); ++k)
      if (sub[k] < sub[i]) ++smaller_after;
    idx = idx * static_cast<int>(sub.size() - i) + smaller_after;
  }
  return idx;
}

}  // namespace

Rational enumerate_exact(int n, std::optional<int> j, StrategyId strategy) {
  if (n < 1 || n > kEnumerationBound)
    throw std::domain_error("enumerate_exact: n beyond the enumeration bound");
  if (j && (*j < 1 || *j > n)) throw std::out_of_range("enumerate_exact: rank out of range");

  std::vector<Key> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  unsigned long long total = 0;
  do {
    if (j) {
      total += static_cast<unsigned long long>(run_select(perm, *j, strategy));
    } else {
      for (int rank = 1; rank <= n; ++rank)
        total += static_cast<unsigned long long>(run_select(perm, rank, strategy));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  long denom = factorial(n);
  if (!j) denom *= n;
  return Rational(static_cast<long>(total)) / Rational(denom);
}

CostValue monte_carlo(int n, std::optional<int> j, StrategyId strategy,
                      long long trials, std::uint64_t seed, int threads) {
  if (trials < 1) throw std::invalid_argument("monte_carlo: trials must be >= 1");
  if (n < 1) throw std::invalid_argument("monte_carlo: n must be >= 1");
  if (j && (*j < 1 || *j > n)) throw std::out_of_range("monte_carlo: rank out of range");

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, trials)));

  std::vector<unsigned long long> sums(threads, 0), sqsums(threads, 0);
  auto worker = [&](int which, long long lo, long long hi) {
    std::vector<Key> keys(n);
    unsigned long long s = 0, s2 = 0;
    for (long long t = lo; t < hi; ++t) {
      SplitMix64 rng{trial_seed(seed, t)};
      fill_shuffled(keys, rng);
      const int rank = j ? *j : static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
      const unsigned long long c =
          static_cast<unsigned long long>(run_select(keys, rank, strategy));
      s += c;
      s2 += c * c;
    }
    sums[which] = s;
    sqsums[which] = s2;
  };

  const long long chunk = (trials + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    const long long lo = w * chunk;
    const long long hi = std::min<long long>(trials, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(worker, w, lo, hi);
  }
  for (auto& th : pool) th.join();

  // Integer partial sums: the reduction is order-independent.
  unsigned long long sum = 0, sq = 0;
  for (int w = 0; w < threads; ++w) {
    sum += sums[w];
    sq += sqsums[w];
  }

  CostValue out;
  out.kind = CostValue::Kind::estimated;
  out.trials = trials;
  out.seed = seed;
  const double mean = static_cast<double>(sum) / static_cast<double>(trials);
  out.mean = mean;
  if (trials == 1) {
    out.stderr_of_mean = std::numeric_limits<double>::infinity();
  } else {
    const double var =
        (static_cast<double>(sq) - static_cast<double>(trials) * mean * mean) /
        static_cast<double>(trials - 1);
    out.stderr_of_mean = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
  }
  return out;
}

RandomnessReport randomness_preservation_check(int n, StrategyId strategy) {
  if (n < 2 || n > 7) throw std::domain_error("randomness_preservation_check: n must be 2..7");

  // key: (s, m, l, sublist) -> pattern counts
  std::map<std::tuple<int, int, int, int>, std::vector<long long>> counts;
  std::vector<Key> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    const PartitionResult part = partition(perm, strategy);
    const int s = static_cast<int>(part.smalls.size());
    const int m = static_cast<int>(part.mediums.size());
    const int l = static_cast<int>(part.larges.size());
    const std::vector<Key>* subs[3] = {&part.smalls, &part.mediums, &part.larges};
    for (int which = 0; which < 3; ++which) {
      if (subs[which]->empty()) continue;
      auto& cell = counts[{s, m, l, which}];
      if (cell.empty()) cell.assign(factorial(static_cast<int>(subs[which]->size())), 0);
      ++cell[pattern_index(*subs[which])];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  RandomnessReport report;
  for (const auto& [key, pattern_counts] : counts) {
    RandomnessReport::Cell cell;
    cell.s = std::get<0>(key);
    cell.m = std::get<1>(key);
    cell.l = std::get<2>(key);
    cell.sublist = std::get<3>(key);
    cell.pattern_counts = pattern_counts;
    cell.uniform = std::all_of(pattern_counts.begin(), pattern_counts.end(),
                               [&](long long c) { return c == pattern_counts.front(); });
    report.uniform = report.uniform && cell.uniform;
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace dpqs
