#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "dpqs/strategies.hpp"

using namespace dpqs;

TEST_SUITE_BEGIN("strategies");

TEST_CASE("strategy id round trip") {
  for (StrategyId s : {StrategyId::sf, StrategyId::lf, StrategyId::ct, StrategyId::cv,
                       StrategyId::yar, StrategyId::classical})
    CHECK(parse_strategy(to_string(s)) == s);
  CHECK(!parse_strategy("bogus"));
}

TEST_CASE("first pivot choices") {
  StreamState count{.id = StrategyId::ct};
  CHECK(first_pivot(count) == PivotChoice::P);  // tie goes to P
  count.seen_small = 1;
  count.seen_large = 2;
  CHECK(first_pivot(count) == PivotChoice::Q);
  count.seen_small = 2;
  CHECK(first_pivot(count) == PivotChoice::P);

  StreamState oracle{.id = StrategyId::cv, .remaining_small = 3, .remaining_large = 3};
  CHECK(first_pivot(oracle) == PivotChoice::P);
  oracle.remaining_large = 4;
  CHECK(first_pivot(oracle) == PivotChoice::Q);

  CHECK(first_pivot({.id = StrategyId::sf}) == PivotChoice::P);
  CHECK(first_pivot({.id = StrategyId::lf}) == PivotChoice::Q);
}

TEST_CASE("classification costs") {
  // p = 10, q = 20
  CHECK(classify(5, 10, 20, PivotChoice::P).cls == ElementClass::Small);
  CHECK(classify(5, 10, 20, PivotChoice::P).comparisons == 1);
  CHECK(classify(5, 10, 20, PivotChoice::Q).comparisons == 2);
  CHECK(classify(15, 10, 20, PivotChoice::P).cls == ElementClass::Medium);
  CHECK(classify(15, 10, 20, PivotChoice::P).comparisons == 2);
  CHECK(classify(15, 10, 20, PivotChoice::Q).comparisons == 2);
  CHECK(classify(25, 10, 20, PivotChoice::Q).cls == ElementClass::Large);
  CHECK(classify(25, 10, 20, PivotChoice::Q).comparisons == 1);
  CHECK(classify(25, 10, 20, PivotChoice::P).comparisons == 2);
  CHECK_THROWS(classify(10, 10, 20, PivotChoice::P));
}

TEST_CASE("two-element partition is a single comparison") {
  const std::vector<Key> keys{2, 1};
  for (StrategyId s : {StrategyId::sf, StrategyId::lf, StrategyId::ct, StrategyId::cv,
                       StrategyId::yar}) {
    const PartitionResult part = partition(keys, s);
    CHECK(part.comparisons == 1);
    CHECK(part.smalls.empty());
    CHECK(part.mediums.empty());
    CHECK(part.larges.empty());
    CHECK(part.p == 1);
    CHECK(part.q == 2);
  }
  CHECK_THROWS(partition(std::vector<Key>{1}, StrategyId::sf));
}

TEST_CASE("three elements, smaller-first, small middle") {
  const std::vector<Key> keys{2, 1, 3};  // pivots 2 and 3, middle element 1 is small
  const PartitionResult part = partition(keys, StrategyId::sf);
  CHECK(part.comparisons == 2);
  CHECK(part.smalls == std::vector<Key>{1});
}

TEST_CASE("comparison bounds and smaller-first class-count law") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<Key> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (StrategyId s : {StrategyId::sf, StrategyId::lf, StrategyId::ct, StrategyId::cv,
                           StrategyId::yar}) {
        const PartitionResult part = partition(perm, s);
        CHECK(part.comparisons >= 1 + (n - 2));
        CHECK(part.comparisons <= 1 + 2 * (n - 2));
        CHECK(static_cast<int>(part.smalls.size() + part.mediums.size() +
                               part.larges.size()) == n - 2);
        if (s == StrategyId::sf)
          CHECK(part.comparisons ==
                1 + static_cast<long long>(part.smalls.size()) +
                    2 * (part.mediums.size() + part.larges.size()));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("stream partition preserves relative input order") {
  const std::vector<Key> keys{4, 7, 1, 9, 3, 6, 8};  // pivots 4 and 8
  for (StrategyId s : {StrategyId::sf, StrategyId::ct, StrategyId::cv}) {
    const PartitionResult part = partition(keys, s);
    CHECK(part.smalls == std::vector<Key>{1, 3});
    CHECK(part.mediums == std::vector<Key>{7, 6});
    CHECK(part.larges == std::vector<Key>{9});
  }
}

TEST_CASE("count and clairvoyant costs depend only on the class sequence") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Key> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<Key> relabeled(perm.size());
      std::transform(perm.begin(), perm.end(), relabeled.begin(),
                     [](Key k) { return 10 * k + 3; });
      for (StrategyId s : {StrategyId::ct, StrategyId::cv})
        CHECK(partition(perm, s).comparisons == partition(relabeled, s).comparisons);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("mean partition cost ordering cv <= ct <= sf over all permutations") {
  for (int n = 3; n <= 9; ++n) {
    std::vector<Key> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    long long cv = 0, ct = 0, sf = 0;
    do {
      cv += partition(perm, StrategyId::cv).comparisons;
      ct += partition(perm, StrategyId::ct).comparisons;
      sf += partition(perm, StrategyId::sf).comparisons;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(cv <= ct);
    CHECK(ct <= sf);
  }
}

TEST_CASE("yaroslavskiy partition fixtures") {
  // pivots 3 and 5; 4 compares with both pivots, 1 and 2 with p only
  const std::vector<Key> keys{3, 4, 1, 2, 5};
  const PartitionResult part = partition(keys, StrategyId::yar);
  CHECK(part.comparisons == 5);
  CHECK(part.p == 3);
  CHECK(part.q == 5);
  CHECK(part.smalls.size() == 2);
  CHECK(part.mediums.size() == 1);
  CHECK(part.larges.empty());

  // elements beyond q trigger the right-to-left guard scan; hand trace gives
  // nine comparisons (two of them on the guard element itself)
  const std::vector<Key> keys2{2, 5, 4, 1, 3};  // pivots 2 and 3
  const PartitionResult part2 = partition(keys2, StrategyId::yar);
  CHECK(part2.comparisons == 9);
  CHECK(part2.p == 2);
  CHECK(part2.q == 3);
  CHECK(part2.smalls == std::vector<Key>{1});
  CHECK(part2.mediums.empty());
  CHECK(part2.larges == std::vector<Key>{5, 4});
}

TEST_SUITE_END();
