#include "standby/logistic.hpp"

#include <algorithm>
#include <cmath>

#include "standby/error.hpp"

namespace standby {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

namespace {

constexpr double kClip = 1e-15;

// log(1 + e^z) without overflow.
double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z))); }

}  // namespace

TrainResult train_logistic(std::span<const LabeledTrip> data, const FeatureSpec& spec,
                           const TrainOptions& opts) {
  if (data.empty()) raise(Errc::EmptyInput, "train_logistic: no data");
  const std::size_t n = data.size();
  const std::size_t p = static_cast<std::size_t>(spec.columns);

  std::vector<double> X(n * p);
  std::vector<double> y(n);
  bool any0 = false, any1 = false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> row = encode(data[i].features, spec);
    std::copy(row.begin(), row.end(), X.begin() + static_cast<std::ptrdiff_t>(i * p));
    y[i] = data[i].label ? 1.0 : 0.0;
    (data[i].label ? any1 : any0) = true;
  }
  if (!any0 || !any1) raise(Errc::SingleClassData, "train_logistic: all labels identical");

  const double lambda = opts.l2_lambda;
  const double inv_n = 1.0 / static_cast<double>(n);

  double b0 = 0;
  std::vector<double> w(p, 0.0);
  std::vector<double> z(n, 0.0);   // current margins b0 + X w
  std::vector<double> g(p + 1);    // gradient: [intercept, weights]
  std::vector<double> zd(n);       // directional margins for the line search

  auto loss_of = [&](const std::vector<double>& margins, const std::vector<double>& weights) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += softplus(margins[i]) - y[i] * margins[i];
    double reg = 0;
    for (double v : weights) reg += v * v;
    return s * inv_n + 0.5 * lambda * reg;
  };

  double loss = loss_of(z, w);
  double step = 1.0;
  bool converged = false;
  int iter = 0;
  double grad_inf = 0;

  std::vector<double> w_new(p);
  std::vector<double> z_new(n);

  for (; iter < opts.max_iters; ++iter) {
    // gradient
    double g0 = 0;
    std::fill(g.begin() + 1, g.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double r = sigmoid(z[i]) - y[i];
      g0 += r;
      const double* xi = &X[i * p];
      for (std::size_t j = 0; j < p; ++j) g[j + 1] += r * xi[j];
    }
    g[0] = g0 * inv_n;
    for (std::size_t j = 0; j < p; ++j) g[j + 1] = g[j + 1] * inv_n + lambda * w[j];

    grad_inf = 0;
    double g_sq = 0;
    for (double v : g) {
      grad_inf = std::max(grad_inf, std::fabs(v));
      g_sq += v * v;
    }
    if (grad_inf < opts.tol) {
      converged = true;
      break;
    }

    // directional margins for d = -g
    for (std::size_t i = 0; i < n; ++i) {
      const double* xi = &X[i * p];
      double s = g[0];
      for (std::size_t j = 0; j < p; ++j) s += g[j + 1] * xi[j];
      zd[i] = -s;
    }

    // backtracking Armijo line search
    double t = std::min(step * 2.0, 1.0e6);
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t j = 0; j < p; ++j) w_new[j] = w[j] - t * g[j + 1];
      for (std::size_t i = 0; i < n; ++i) z_new[i] = z[i] + t * zd[i];
      const double cand = loss_of(z_new, w_new);
      if (cand <= loss - 1e-4 * t * g_sq) {
        b0 -= t * g[0];
        w.swap(w_new);
        z.swap(z_new);
        loss = cand;
        step = t;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;  // step underflow; gradient norm reported as-is
  }

  TrainResult res;
  res.model.spec = spec;
  res.model.intercept = b0;
  res.model.weights = std::move(w);
  res.model.l2_lambda = lambda;
  res.converged = converged;
  res.iters = iter;
  res.grad_inf_norm = grad_inf;
  return res;
}

double predict_logit(const LogisticModel& m, std::span<const double> encoded) {
  double z = m.intercept;
  for (std::size_t j = 0; j < encoded.size(); ++j) z += m.weights[j] * encoded[j];
  return z;
}

double predict_proba(const LogisticModel& m, const TripFeatures& f) {
  const auto x = encode(f, m.spec);
  const double pr = sigmoid(predict_logit(m, x));
  return std::clamp(pr, kClip, 1.0 - kClip);
}

double cross_entropy(std::span<const double> predictions, std::span<const int> labels) {
  if (predictions.size() != labels.size())
    raise(Errc::LengthMismatch, "cross_entropy: " + std::to_string(predictions.size()) + " vs " +
                                    std::to_string(labels.size()));
  if (predictions.empty()) raise(Errc::EmptyInput, "cross_entropy: empty");
  double s = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const double pr = std::clamp(predictions[i], kClip, 1.0 - kClip);
    s += labels[i] ? -std::log(pr) : -std::log1p(-pr);
  }
  return s / static_cast<double>(predictions.size());
}

}  // namespace standby
