#pragma once

#include <cstdint>
#include <span>

namespace standby {

/// Two-sided permutation test on the absolute difference of sample means,
/// with +1 smoothing: p = (1 + #{permuted |d| >= observed |d|}) / (n_perm + 1).
/// Deterministic for a fixed seed and symmetric in its two arguments.
double permutation_test(std::span<const double> a, std::span<const double> b, int n_perm,
                        std::uint64_t seed);

}  // namespace standby
