#pragma once

#include <span>

#include "dpqs/strategies.hpp"

namespace dpqs {

struct SelectOutcome {
  Key selected;
  long long comparisons;
};

// Rank selection (j is 1-based) over distinct keys via dual-pivot
// partitioning with the given strategy at every level. A singleton list
// costs nothing.
SelectOutcome select(std::span<const Key> keys, int j, StrategyId strategy);

// Single-pivot baseline: pivot is the first element, n-1 comparisons per
// round, recursion into the side containing the rank.
SelectOutcome select_classical(std::span<const Key> keys, int j);

}  // namespace dpqs
