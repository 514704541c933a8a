#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "dpqs/exactdp.hpp"
#include "dpqs/formulas.hpp"
#include "dpqs/gfcatalog.hpp"

using namespace dpqs;

namespace {

// Straight transcription of the recurrence with its original summation
// bounds, used as an independent oracle for the prefix-sum engine.
class NaiveRecurrence {
 public:
  explicit NaiveRecurrence(StrategyId s) : strategy_(s) {}

  Rational cost(int n, int j) {
    if (n <= 1) return Rational(0);
    if (j < 1 || j > n) return Rational(0);
    const auto key = std::make_pair(n, j);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Rational binom(static_cast<long>(n) * (n - 1) / 2);
    Rational small_part(0), medium_part(0), large_part(0);
    for (int s = j; s <= n - 2; ++s)
      small_part += Rational(n - 1 - s) * cost(s, j);
    for (int m = 1; m <= n - 2; ++m)
      for (int s = std::max(0, j - m - 1); s <= std::min(j - 2, n - m - 2); ++s)
        medium_part += cost(m, j - s - 1);
    for (int l = n - j + 1; l <= n - 2; ++l)
      large_part += Rational(n - 1 - l) * cost(l, n - j + 1);
    const Rational value =
        partition_cost(strategy_, n) + (small_part + medium_part + large_part) / binom;
    memo_.emplace(key, value);
    return value;
  }

 private:
  StrategyId strategy_;
  std::map<std::pair<int, int>, Rational> memo_;
};

}  // namespace

TEST_SUITE_BEGIN("exactdp");

TEST_CASE("partition cost fixtures") {
  CHECK(partition_cost(StrategyId::sf, 3) == Rational(8, 3));
  CHECK(partition_cost(StrategyId::lf, 3) == Rational(8, 3));
  CHECK(partition_cost(StrategyId::ct, 2) == Rational(1));
  CHECK(partition_cost(StrategyId::ct, 3) == Rational(8, 3));
  CHECK(partition_cost(StrategyId::ct, 4) == Rational(17, 4));
  CHECK(partition_cost(StrategyId::cv, 3) == Rational(7, 3));
  CHECK(partition_cost(StrategyId::cv, 4) == Rational(15, 4));
  CHECK_THROWS_AS(partition_cost(StrategyId::ct, 1), std::domain_error);
  CHECK_THROWS(partition_cost(StrategyId::yar, 8));
}

TEST_CASE("count partition cost equals its generating function to 64") {
  const TruncSeries pct = stated_gf(GfName::Pct, 64);
  for (int n = 2; n <= 64; ++n) {
    CHECK(partition_cost_lattice(StrategyId::ct, n) == pct[n]);
    CHECK(partition_cost_shell(StrategyId::ct, n) == pct[n]);
  }
}

TEST_CASE("lattice and level-sum partition paths agree for clairvoyant") {
  for (int n = 2; n <= 64; ++n)
    CHECK(partition_cost_lattice(StrategyId::cv, n) ==
          partition_cost_shell(StrategyId::cv, n));
}

TEST_CASE("lucky lattice boundary values") {
  CHECK(lucky_lattice(StrategyId::ct, 0, 0) == Rational(0));
  CHECK(lucky_lattice(StrategyId::ct, 1, 0) == Rational(1));   // first choice is P
  CHECK(lucky_lattice(StrategyId::ct, 0, 1) == Rational(0));   // P chosen, element large
  CHECK(lucky_lattice(StrategyId::cv, 0, 1) == Rational(1));   // oracle picks Q
  CHECK(lucky_lattice(StrategyId::cv, 1, 1) == Rational(3, 2));
}

TEST_CASE("partition cost dominance to 200") {
  for (int n = 2; n <= 200; ++n) {
    const Rational cv = n <= kLatticeCap ? partition_cost(StrategyId::cv, n)
                                         : partition_cost_shell(StrategyId::cv, n);
    const Rational ct = n <= kLatticeCap ? partition_cost(StrategyId::ct, n)
                                         : partition_cost_shell(StrategyId::ct, n);
    const Rational sf = partition_cost(StrategyId::sf, n);
    CHECK(cv <= ct);
    CHECK(ct <= sf);
  }
}

TEST_CASE("partition cost asymptote constants at 4096") {
  const double g = euler_gamma();
  const double l2 = log2_constant();
  const double ln_n = std::log(4096.0);
  const double ct_dev = partition_cost_float(StrategyId::ct, 4096) - 1.5 * 4096 -
                        0.25 * ln_n - (2 * g + 2 * l2 - 19) / 8;
  const double cv_dev = partition_cost_float(StrategyId::cv, 4096) - 1.5 * 4096 +
                        0.25 * ln_n + (2 * g + 2 * l2 + 13) / 8;
  CHECK(std::abs(ct_dev) < 0.01);
  CHECK(std::abs(cv_dev) < 0.01);
}

TEST_CASE("recurrence boundary fixtures") {
  for (StrategyId s : {StrategyId::sf, StrategyId::ct, StrategyId::cv}) {
    CHECK(expected_cost(s, 1, 1) == Rational(0));
    CHECK(expected_cost(s, 2, 1) == Rational(1));
    CHECK(expected_cost(s, 2, 2) == Rational(1));
  }
  CHECK(expected_cost(StrategyId::ct, 4, 1) == Rational(53, 12));
  CHECK(expected_cost(StrategyId::ct, 4, 2) == Rational(55, 12));
  CHECK(grand_average(StrategyId::ct, 4) == Rational(9, 2));
  CHECK(grand_average(StrategyId::sf, 4) == Rational(55, 12));
  CHECK(grand_average(StrategyId::cv, 4) == Rational(4));
  CHECK(expected_cost(StrategyId::sf, 4, 1) == Rational(9, 2));
  CHECK(expected_cost(StrategyId::cv, 4, 1) == Rational(47, 12));
  CHECK_THROWS_AS(expected_cost(StrategyId::ct, 4, 5), std::out_of_range);
}

TEST_CASE("prefix-sum engine equals the naive recurrence") {
  for (StrategyId s : {StrategyId::sf, StrategyId::ct, StrategyId::cv}) {
    NaiveRecurrence naive(s);
    for (int n = 2; n <= 14; ++n)
      for (int j = 1; j <= n; ++j)
        CHECK(expected_cost(s, n, j) == naive.cost(n, j));
  }
}

TEST_CASE("symmetry of the exact table") {
  for (StrategyId s : {StrategyId::sf, StrategyId::ct, StrategyId::cv})
    for (int n = 2; n <= 64; ++n)
      for (int j = 1; j <= n; ++j)
        CHECK(expected_cost(s, n, j) == expected_cost(s, n, n - j + 1));
}

TEST_CASE("grand average ordering cv <= ct <= sf to 200") {
  for (int n = 2; n <= kExactBackendCap; ++n) {
    CHECK(grand_average(StrategyId::cv, n) <= grand_average(StrategyId::ct, n));
    CHECK(grand_average(StrategyId::ct, n) <= grand_average(StrategyId::sf, n));
  }
  for (int n = kExactBackendCap + 1; n <= 200; ++n) {
    CHECK(grand_average_float(StrategyId::cv, n) <=
          grand_average_float(StrategyId::ct, n) + 1e-9);
    CHECK(grand_average_float(StrategyId::ct, n) <=
          grand_average_float(StrategyId::sf, n) + 1e-9);
  }
}

TEST_CASE("float backend tracks the exact backend") {
  for (const auto& [n, j] : {std::pair{128, 7}, {64, 1}, {100, 50}}) {
    const double exact = expected_cost(StrategyId::ct, n, j).to_double();
    const double approx = expected_cost_float(StrategyId::ct, n, j);
    CHECK(std::abs(approx - exact) / exact < 1e-9);
  }
  CHECK(expected_cost_float(StrategyId::ct, 4096, 1) > 0);
  CHECK(std::isfinite(expected_cost_float(StrategyId::ct, 4096, 1)));
}

TEST_CASE("rank-1 cost grows monotonically on a doubling grid") {
  double prev = 0;
  for (int n = 16; n <= 4096; n *= 2) {
    const double cur = expected_cost_float(StrategyId::ct, n, 1);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("cost table csv export shape") {
  const CostTable<Rational> table(StrategyId::ct, 4);
  std::ostringstream os;
  write_cost_table_csv(os, table);
  const std::string text = os.str();
  CHECK(text.find("strategy,n,j,value,backend") == 0);
  CHECK(text.find("ct,4,2,55/12,exact") != std::string::npos);
  CHECK(text.find("ct,4,grand,9/2,exact") != std::string::npos);
}

TEST_SUITE_END();
