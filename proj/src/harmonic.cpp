#include "dpqs/harmonic.hpp"

#include <mutex>
#include <vector>

namespace dpqs {

namespace {

struct SumCache {
  std::mutex mu;
  std::vector<Rational> vals{Rational(0)};  // vals[n]
};

Rational cached(SumCache& cache, int n, const auto& step) {
  if (n < 0) throw std::domain_error("harmonic: negative index");
  std::lock_guard lock(cache.mu);
  while (static_cast<int>(cache.vals.size()) <= n) {
    const int k = static_cast<int>(cache.vals.size());
    cache.vals.push_back(cache.vals.back() + step(k));
  }
  return cache.vals[n];
}

}  // namespace

Rational harmonic(int n) {
  static SumCache cache;
  return cached(cache, n, [](int k) { return Rational(1, k); });
}

Rational alt_harmonic(int n) {
  static SumCache cache;
  return cached(cache, n, [](int k) { return Rational(k % 2 == 0 ? 1 : -1, k); });
}

Rational special_sum(SpecialSum kind, int n) {
  if (n < 1) throw std::domain_error("special_sum: n must be positive");
  Rational acc(0);
  switch (kind) {
    case SpecialSum::hh_conv:
      for (int k = 1; k <= n - 1; ++k) acc += harmonic(k) * harmonic(n - k);
      return acc;
    case SpecialSum::h_over:
      for (int k = 1; k <= n - 1; ++k) acc += harmonic(k) / Rational(n - k);
      return acc;
    case SpecialSum::altw:
      for (int k = 1; k <= n; ++k)
        acc += alt_harmonic(k - 1) / Rational(k) * Rational(n - k + 1);
      return acc;
    case SpecialSum::alt_over_k:
      for (int k = 2; k <= n; ++k) acc += alt_harmonic(k - 1) / Rational(k);
      return acc;
    case SpecialSum::recip:
      for (int k = 1; k <= n - 1; ++k) acc += Rational(1, static_cast<long>(k) * (n - k));
      return acc;
  }
  throw std::invalid_argument("special_sum: unknown kind");
}

}  // namespace dpqs
