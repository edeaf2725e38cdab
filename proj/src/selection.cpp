#include "standby/selection.hpp"

#include <algorithm>
#include <stdexcept>

#include "standby/error.hpp"

namespace standby {

namespace {

double dataset_ce(const LogisticModel& m, std::span<const LabeledTrip> data) {
  std::vector<double> preds(data.size());
  std::vector<int> labels(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    preds[i] = predict_proba(m, data[i].features);
    labels[i] = data[i].label;
  }
  return cross_entropy(preds, labels);
}

}  // namespace

std::vector<FeatureSetReport> select_feature_set(std::span<const LabeledTrip> train,
                                                 std::span<const LabeledTrip> test,
                                                 std::span<const CatFeature> candidates,
                                                 std::span<const NumFeature> numericals,
                                                 const TrainOptions& opts) {
  if (train.empty() || test.empty()) raise(Errc::EmptyInput, "select_feature_set: empty split");
  if (candidates.size() > 20) raise(Errc::ConfigInvalid, "too many candidate features");
  const std::uint32_t n_masks = 1u << candidates.size();

  std::vector<FeatureSetReport> reports(n_masks);
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(n_masks); ++mask) {
    try {
      std::vector<CatFeature> cats;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (mask & (1u << i)) cats.push_back(candidates[i]);

      FeatureSetReport rep;
      rep.mask = static_cast<std::uint32_t>(mask);
      rep.spec = build_feature_spec(train, cats, numericals);
      const TrainResult tr = train_logistic(train, rep.spec, opts);
      rep.train_ce = dataset_ce(tr.model, train);
      rep.test_ce = dataset_ce(tr.model, test);
      reports[static_cast<std::size_t>(mask)] = std::move(rep);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return a.test_ce != b.test_ce ? a.test_ce < b.test_ce : a.mask < b.mask;
  });
  return reports;
}

}  // namespace standby
