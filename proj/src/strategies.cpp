#include "dpqs/strategies.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dpqs {

std::string to_string(StrategyId s) {
  switch (s) {
    case StrategyId::sf: return "sf";
    case StrategyId::lf: return "lf";
    case StrategyId::ct: return "ct";
    case StrategyId::cv: return "cv";
    case StrategyId::yar: return "yar";
    case StrategyId::classical: return "classical";
  }
  throw std::invalid_argument("unknown strategy");
}

std::optional<StrategyId> parse_strategy(std::string_view text) {
  if (text == "sf") return StrategyId::sf;
  if (text == "lf") return StrategyId::lf;
  if (text == "ct") return StrategyId::ct;
  if (text == "cv") return StrategyId::cv;
  if (text == "yar") return StrategyId::yar;
  if (text == "classical") return StrategyId::classical;
  return std::nullopt;
}

PivotChoice first_pivot(const StreamState& state) {
  switch (state.id) {
    case StrategyId::sf: return PivotChoice::P;
    case StrategyId::lf: return PivotChoice::Q;
    case StrategyId::ct:
      return state.seen_large > state.seen_small ? PivotChoice::Q : PivotChoice::P;
    case StrategyId::cv:
      return state.remaining_large > state.remaining_small ? PivotChoice::Q : PivotChoice::P;
    default:
      throw std::invalid_argument("first_pivot: not a classification strategy");
  }
}

ClassifyResult classify(Key x, Key p, Key q, PivotChoice choice) {
  if (x == p || x == q) throw std::invalid_argument("classify: element equals a pivot");
  if (choice == PivotChoice::P) {
    if (x < p) return {ElementClass::Small, 1};
    return {x < q ? ElementClass::Medium : ElementClass::Large, 2};
  }
  if (x > q) return {ElementClass::Large, 1};
  return {x > p ? ElementClass::Medium : ElementClass::Small, 2};
}

namespace {

PartitionResult partition_stream(std::span<const Key> keys, StrategyId strategy) {
  const int n = static_cast<int>(keys.size());
  PartitionResult out;
  out.p = keys.front();
  out.q = keys.back();
  out.comparisons = 1;
  if (out.p > out.q) std::swap(out.p, out.q);

  StreamState state{.id = strategy};
  if (strategy == StrategyId::cv) {
    for (int i = 1; i + 1 < n; ++i) {
      if (keys[i] < out.p) ++state.remaining_small;
      if (keys[i] > out.q) ++state.remaining_large;
    }
  }

  for (int i = 1; i + 1 < n; ++i) {
    const auto [cls, cost] = classify(keys[i], out.p, out.q, first_pivot(state));
    out.comparisons += cost;
    switch (cls) {
      case ElementClass::Small:
        out.smalls.push_back(keys[i]);
        ++state.seen_small;
        --state.remaining_small;
        break;
      case ElementClass::Medium:
        out.mediums.push_back(keys[i]);
        break;
      case ElementClass::Large:
        out.larges.push_back(keys[i]);
        ++state.seen_large;
        --state.remaining_large;
        break;
    }
  }
  return out;
}

// Classic dual-pivot two-pointer partition loop, pivots taken from the ends
// without sampling. Every key-vs-pivot test is counted.
PartitionResult partition_yaroslavskiy(std::span<const Key> keys) {
  std::vector<Key> a(keys.begin(), keys.end());
  const int left = 0;
  const int right = static_cast<int>(a.size()) - 1;
  long long comparisons = 1;
  if (a[left] > a[right]) std::swap(a[left], a[right]);
  const Key p = a[left];
  const Key q = a[right];

  int l = left + 1;
  int g = right - 1;
  int k = l;
  while (k <= g) {
    ++comparisons;
    if (a[k] < p) {
      std::swap(a[k], a[l]);
      ++l;
    } else {
      ++comparisons;
      if (a[k] > q) {
        // The guard comparison is evaluated (and counted) before the index
        // check, including on the terminating iteration.
        while (true) {
          ++comparisons;
          if (a[g] > q && k < g) --g;
          else break;
        }
        std::swap(a[k], a[g]);
        --g;
        ++comparisons;
        if (a[k] < p) {
          std::swap(a[k], a[l]);
          ++l;
        }
      }
    }
    ++k;
  }
  std::swap(a[left], a[l - 1]);
  std::swap(a[right], a[g + 1]);

  PartitionResult out;
  out.p = p;
  out.q = q;
  out.comparisons = comparisons;
  out.smalls.assign(a.begin() + left, a.begin() + (l - 1));
  out.mediums.assign(a.begin() + l, a.begin() + (g + 1));
  out.larges.assign(a.begin() + (g + 2), a.begin() + (right + 1));
  return out;
}

}  // namespace

PartitionResult partition(std::span<const Key> keys, StrategyId strategy) {
  if (keys.size() < 2) throw std::invalid_argument("partition: need at least two keys");
  if (strategy == StrategyId::classical)
    throw std::invalid_argument("partition: classical is single-pivot, use select_classical");
  if (strategy == StrategyId::yar) return partition_yaroslavskiy(keys);
  return partition_stream(keys, strategy);
}

}  // namespace dpqs
