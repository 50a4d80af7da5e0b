#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "larlens/tensorio.hpp"

namespace larlens {

// Centered training-loss window used for the generalization gap. The source
// trace used 14 steps; a centered window needs odd length, so 15 is the default.
inline constexpr std::int64_t kReferenceSmoothWindow = 14;

struct DetectorConfig {
  std::size_t window_evals = 5;
  double rel_threshold = 0.02;
  std::int64_t smooth_window_steps = 15;
  std::int64_t decline_window_steps = 1000;

  void validate() const;
};

struct StepValue {
  std::int64_t step = 0;
  double value = 0.0;

  friend bool operator==(const StepValue&, const StepValue&) = default;
};

struct DeclineWindow {
  std::int64_t window_start = 0;
  std::int64_t window_end = 0;
  bool to_end = false;  // final partial window
  std::size_t points = 0;
  std::optional<double> neg_slope_per_1000;  // absent with fewer than 2 points

  std::string label() const;
};

struct DetectionResult {
  std::optional<std::int64_t> onset_step;
  std::int64_t peak_step = 0;
  std::vector<DeclineWindow> decline_table;
  std::vector<StepValue> lar_differential;
  std::vector<StepValue> gen_gap;
};

// First evaluation at which the mean validation loss over the trailing
// `window_evals` evaluations exceeds the running minimum of those trailing
// means by at least rel_threshold (relative).
std::optional<std::int64_t> detect_onset(const MetricTrace& trace, const DetectorConfig& cfg);

// baseline.lar - run.lar at every step where both carry a finite lar.
std::vector<StepValue> lar_differential(const MetricTrace& run, const MetricTrace& baseline);

// val_loss minus the centered moving average of train_loss, at validation steps.
std::vector<StepValue> generalization_gap(const MetricTrace& trace, const DetectorConfig& cfg);
// Centered moving average of train_loss at `step`, window truncated
// symmetrically at the trace edges.
std::optional<double> smoothed_train_loss(const MetricTrace& trace, std::int64_t step,
                                          std::int64_t window_steps);

// Step of the maximum finite lar; earliest on ties.
std::int64_t peak_lar_step(const MetricTrace& trace);

std::vector<DeclineWindow> decline_table(const MetricTrace& trace, const DetectorConfig& cfg);

// Ordinary least-squares slope of y against x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

// Runs every detector that the trace supports. Onset and gap are skipped when
// the trace carries no validation loss; the differential needs a baseline.
DetectionResult detect(const MetricTrace& trace, const MetricTrace* baseline,
                       const DetectorConfig& cfg);

nlohmann::json to_json(const DetectionResult& result);
// A peak-step row followed by one row per window: (window, start, end,
// points, neg_slope_per_1000).
CsvTable decline_csv(const DetectionResult& result);

}  // namespace larlens
