#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "standby/logistic.hpp"

namespace standby {

struct FeatureSetReport {
  std::uint32_t mask = 0;  // bit i = candidates[i] included
  FeatureSpec spec;
  double train_ce = 0;
  double test_ce = 0;
};

/// Trains one model per subset of the candidate categoricals (2^m models; the
/// numericals are held fixed across all of them) and reports train/test
/// cross-entropy for each, sorted by test cross-entropy ascending. Training
/// calls are independent and run in parallel when OpenMP is enabled.
std::vector<FeatureSetReport> select_feature_set(std::span<const LabeledTrip> train,
                                                 std::span<const LabeledTrip> test,
                                                 std::span<const CatFeature> candidates,
                                                 std::span<const NumFeature> numericals,
                                                 const TrainOptions& opts = {});

}  // namespace standby
