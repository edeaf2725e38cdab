#include "standby/isotonic.hpp"

#include <algorithm>
#include <numeric>

#include "standby/error.hpp"

namespace standby {

IsotonicCalibrator fit_isotonic(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size())
    raise(Errc::LengthMismatch, "fit_isotonic: " + std::to_string(scores.size()) + " vs " +
                                    std::to_string(labels.size()));
  if (scores.empty()) raise(Errc::EmptyInput, "fit_isotonic: empty");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // pool exact score ties into weighted points
  struct Block {
    double score;
    double sum;
    double weight;
    double mean() const { return sum / weight; }
  };
  std::vector<Block> pts;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double s = scores[order[k]];
    const double v = static_cast<double>(labels[order[k]]);
    if (!pts.empty() && pts.back().score == s) {
      pts.back().sum += v;
      pts.back().weight += 1;
    } else {
      pts.push_back({s, v, 1.0});
    }
  }

  // PAVA over a stack of blocks: merge while the tail violates monotonicity
  std::vector<Block> stack;
  std::vector<int> count;  // points merged into each stack block
  stack.reserve(pts.size());
  for (const Block& b : pts) {
    stack.push_back(b);
    count.push_back(1);
    while (stack.size() > 1 && stack[stack.size() - 2].mean() > stack.back().mean()) {
      stack[stack.size() - 2].sum += stack.back().sum;
      stack[stack.size() - 2].weight += stack.back().weight;
      count[count.size() - 2] += count.back();
      stack.pop_back();
      count.pop_back();
    }
  }

  IsotonicCalibrator cal;
  std::size_t pt = 0;
  for (std::size_t b = 0; b < stack.size(); ++b) {
    const double fitted = stack[b].mean();
    for (int c = 0; c < count[b]; ++c, ++pt) cal.breakpoints.emplace_back(pts[pt].score, fitted);
  }
  return cal;
}

double calibrate(const IsotonicCalibrator& cal, double raw) {
  const auto& bp = cal.breakpoints;
  if (bp.empty()) raise(Errc::EmptyCalibrator, "calibrate: no breakpoints");
  if (raw <= bp.front().first) return bp.front().second;
  if (raw >= bp.back().first) return bp.back().second;
  auto hi = std::lower_bound(bp.begin(), bp.end(), raw,
                             [](const auto& p, double v) { return p.first < v; });
  auto lo = hi - 1;
  const double t = (raw - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

}  // namespace standby
