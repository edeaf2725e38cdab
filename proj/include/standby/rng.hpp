#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "standby/error.hpp"

namespace standby {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Decorrelated seed for substream `index` of a master seed. Chain i of a
/// sampling run and worker i of an evaluation both use this, so results do
/// not depend on scheduling order.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x6a09e667f3bcc909ULL));
}

/// mt19937_64 with hand-rolled samplers. The standard distributions are
/// implementation-defined, which would break reproducibility guarantees
/// across toolchains; these are fully pinned.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) raise(Errc::Internal, "Rng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % n;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Knuth's product method; splits large means so the exp() never underflows.
  long poisson(double lambda) {
    if (lambda < 0) raise(Errc::Internal, "poisson: negative mean");
    if (lambda == 0) return 0;
    if (lambda > 200.0) return poisson(lambda / 2) + poisson(lambda / 2);
    const double threshold = std::exp(-lambda);
    long k = 0;
    double prod = uniform01();
    while (prod > threshold) {
      ++k;
      prod *= uniform01();
    }
    return k;
  }

  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

  double normal(double mu, double sigma) {
    // Box-Muller, first branch only: one draw pair per variate keeps the
    // stream position independent of call history.
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    return mu + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /// Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace standby
