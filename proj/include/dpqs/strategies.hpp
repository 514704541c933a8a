#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dpqs {

using Key = int;

enum class StrategyId { sf, lf, ct, cv, yar, classical };

std::string to_string(StrategyId s);
std::optional<StrategyId> parse_strategy(std::string_view text);

enum class ElementClass { Small, Medium, Large };
enum class PivotChoice { P, Q };

// Per-partition state of a classification strategy. Count tracks what it has
// seen; Clairvoyant is told what is still ahead (the element about to be
// classified counts as remaining).
struct StreamState {
  StrategyId id = StrategyId::sf;
  int seen_small = 0;
  int seen_large = 0;
  int remaining_small = 0;
  int remaining_large = 0;
};

// Which pivot the next element is compared with first. Ties go to P.
PivotChoice first_pivot(const StreamState& state);

struct ClassifyResult {
  ElementClass cls;
  int comparisons;  // 1 or 2
};

// One key comparison if the first pivot already decides the class, two
// otherwise. Requires p < q and x distinct from both.
ClassifyResult classify(Key x, Key p, Key q, PivotChoice choice);

struct PartitionResult {
  std::vector<Key> smalls, mediums, larges;
  Key p, q;
  long long comparisons;
};

// Dual-pivot partition of distinct keys (n >= 2). Pivots are the first and
// last element; ordering them costs one comparison. The remaining elements
// are scanned left to right and each class keeps the relative input order
// (for yar, the order produced by its in-place swapping).
PartitionResult partition(std::span<const Key> keys, StrategyId strategy);

}  // namespace dpqs
