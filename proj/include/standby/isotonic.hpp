#pragma once

#include <span>
#include <utility>
#include <vector>

namespace standby {

/// Monotone score-to-probability map fit by pool-adjacent-violators.
struct IsotonicCalibrator {
  /// (raw_score, calibrated_prob); scores strictly increasing, probs
  /// nondecreasing in [0,1].
  std::vector<std::pair<double, double>> breakpoints;
};

/// Least-squares nondecreasing fit of labels ordered by score. Ties in score
/// are pooled before fitting.
IsotonicCalibrator fit_isotonic(std::span<const double> scores, std::span<const int> labels);

/// Piecewise-linear interpolation between breakpoints, clamped to the first
/// and last calibrated value outside the fitted range.
double calibrate(const IsotonicCalibrator& cal, double raw);

}  // namespace standby
