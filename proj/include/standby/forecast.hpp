#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "standby/isotonic.hpp"
#include "standby/logistic.hpp"

namespace standby {

/// Trained classifier plus optional post-hoc calibrator. The classifier
/// abstraction is fit/predict_proba; logistic regression is the shipped
/// implementation and isotonic calibration is model-agnostic on top.
struct ForecastModel {
  LogisticModel logit;
  std::optional<IsotonicCalibrator> calibrator;

  /// Calibrated probability when a calibrator is present, raw otherwise.
  double probability(const TripFeatures& f) const {
    const double raw = predict_proba(logit, f);
    return calibrator ? calibrate(*calibrator, raw) : raw;
  }
};

void save_model(const ForecastModel& m, const std::filesystem::path& path);
ForecastModel load_model(const std::filesystem::path& path);

/// Day-level inputs the schedule does not carry: date, weather and the
/// expected ridership category per trip.
struct TripContext {
  Date date;
  RidershipCategory ridership = RidershipCategory::Low;
  double precip_in_hr = 0;
  double temp_f = 60;
};

using DayContext = std::map<std::string, TripContext>;  // trip_id ->

/// Assembles the covariate vector for a scheduled trip under a day context.
TripFeatures features_for_trip(const Trip& trip, const TripContext& ctx);

/// One calibrated disruption probability per trip in the schedule.
/// Raises MissingContext(trip_id) if a trip has no context row.
std::map<std::string, double> forecast_day(const ForecastModel& model, const Schedule& schedule,
                                           const DayContext& context);

DayContext load_context_csv(const std::filesystem::path& path);
void save_context_csv(const DayContext& ctx, const std::filesystem::path& path);

struct LabeledDataset {
  std::vector<std::string> trip_ids;
  std::vector<LabeledTrip> rows;
};

LabeledDataset load_labeled_trips(const std::filesystem::path& path);
void save_labeled_trips(const LabeledDataset& ds, const std::filesystem::path& path);

}  // namespace standby
