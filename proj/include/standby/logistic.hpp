#pragma once

#include <span>
#include <vector>

#include "standby/features.hpp"

namespace standby {

struct LogisticModel {
  FeatureSpec spec;
  double intercept = 0;          // beta_0
  std::vector<double> weights;   // beta_1, aligned to spec columns
  double l2_lambda = 0;
};

struct TrainOptions {
  double l2_lambda = 1e-4;
  int max_iters = 10000;
  double tol = 1e-8;  // gradient infinity-norm
};

struct TrainResult {
  LogisticModel model;
  bool converged = false;  // false = DidNotConverge (warning level, model still usable)
  int iters = 0;
  double grad_inf_norm = 0;
};

/// Full-batch gradient descent with backtracking line search, zero init.
/// Minimizes mean cross-entropy + (l2_lambda/2)*||weights||^2 (intercept
/// unpenalized). Deterministic for fixed inputs.
TrainResult train_logistic(std::span<const LabeledTrip> data, const FeatureSpec& spec,
                           const TrainOptions& opts = {});

double sigmoid(double z);

double predict_logit(const LogisticModel& m, std::span<const double> encoded);

/// sigmoid(beta_0 + beta_1 . encode(x)), clamped to (0,1) open interval.
double predict_proba(const LogisticModel& m, const TripFeatures& f);

/// Mean of -[y ln p + (1-y) ln(1-p)] with predictions clipped to
/// [1e-15, 1-1e-15].
double cross_entropy(std::span<const double> predictions, std::span<const int> labels);

}  // namespace standby
