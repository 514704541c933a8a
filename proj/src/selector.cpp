#include "dpqs/selector.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dpqs {

namespace {

void check_rank(size_t n, int j) {
  if (n == 0) throw std::invalid_argument("select: empty input");
  if (j < 1 || static_cast<size_t>(j) > n) throw std::out_of_range("select: rank out of range");
}

}  // namespace

SelectOutcome select(std::span<const Key> keys, int j, StrategyId strategy) {
  check_rank(keys.size(), j);
  if (strategy == StrategyId::classical) return select_classical(keys, j);

  std::vector<Key> cur(keys.begin(), keys.end());
  int rank = j;
  long long total = 0;
  while (cur.size() > 1) {
    PartitionResult part = partition(cur, strategy);
    total += part.comparisons;
    const int s = static_cast<int>(part.smalls.size());
    const int m = static_cast<int>(part.mediums.size());
    if (rank <= s) {
      cur = std::move(part.smalls);
    } else if (rank == s + 1) {
      return {part.p, total};
    } else if (rank <= s + 1 + m) {
      rank -= s + 1;
      cur = std::move(part.mediums);
    } else if (rank == s + m + 2) {
      return {part.q, total};
    } else {
      rank -= s + m + 2;
      cur = std::move(part.larges);
    }
  }
  return {cur.front(), total};
}

SelectOutcome select_classical(std::span<const Key> keys, int j) {
  check_rank(keys.size(), j);
  std::vector<Key> cur(keys.begin(), keys.end());
  int rank = j;
  long long total = 0;
  while (cur.size() > 1) {
    const Key pivot = cur.front();
    std::vector<Key> less, greater;
    for (size_t i = 1; i < cur.size(); ++i) {
      ++total;
      (cur[i] < pivot ? less : greater).push_back(cur[i]);
    }
    const int r = static_cast<int>(less.size()) + 1;
    if (rank == r) return {pivot, total};
    if (rank < r) {
      cur = std::move(less);
    } else {
      rank -= r;
      cur = std::move(greater);
    }
  }
  return {cur.front(), total};
}

}  // namespace dpqs
