#include "standby/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "standby/error.hpp"
#include "standby/rng.hpp"

namespace standby {

double permutation_test(std::span<const double> a, std::span<const double> b, int n_perm,
                        std::uint64_t seed) {
  if (a.empty() || b.empty()) raise(Errc::EmptySample, "permutation_test: empty sample");
  if (n_perm < 1) raise(Errc::ConfigInvalid, "permutation_test: n_perm must be >= 1");

  const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
  const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(b.size());
  const double observed = std::fabs(mean_a - mean_b);

  // Sorted pool and smaller-group-first assignment make the test exactly
  // symmetric under argument swap for the same seed.
  std::vector<double> pool;
  pool.reserve(a.size() + b.size());
  pool.insert(pool.end(), a.begin(), a.end());
  pool.insert(pool.end(), b.begin(), b.end());
  std::sort(pool.begin(), pool.end());
  const std::size_t k = std::min(a.size(), b.size());
  const double total = std::accumulate(pool.begin(), pool.end(), 0.0);

  Rng rng(seed);
  long at_least = 0;
  for (int i = 0; i < n_perm; ++i) {
    rng.shuffle(pool);
    const double sum_k = std::accumulate(pool.begin(), pool.begin() + static_cast<long>(k), 0.0);
    const double d = std::fabs(sum_k / static_cast<double>(k) -
                               (total - sum_k) / static_cast<double>(pool.size() - k));
    if (d >= observed) ++at_least;
  }
  return static_cast<double>(1 + at_least) / static_cast<double>(n_perm + 1);
}

}  // namespace standby
