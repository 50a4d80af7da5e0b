#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "larlens/dense_matrix.hpp"
#include "larlens/grokkit/tasks.hpp"
#include "larlens/grokkit/transformer.hpp"
#include "larlens/lar.hpp"
#include "larlens/tensorio.hpp"

namespace larlens::grokkit {

inline constexpr double kMemorizedTrainAcc = 0.99;
inline constexpr double kMemorizedValAcc = 0.50;
inline constexpr double kGrokkedAcc = 0.99;

struct TrainConfig {
  std::size_t embed_dim = 128;
  std::size_t ff_dim = 512;
  std::size_t heads = 4;
  std::size_t layers = 2;
  double lr = 1e-3;
  double weight_decay = 1.0;
  double beta1 = 0.9;
  double beta2 = 0.98;
  std::size_t batch_size = 512;  // 0 = full batch
  std::int64_t warmup_steps = 10;
  std::int64_t max_epochs = 50000;
  std::int64_t post_grok_epochs = 2000;
  std::int64_t eval_every_epochs = 20;
  std::uint64_t seed = 0;
  // Stop at the first memorized evaluation (fraction sweeps that never grok).
  bool stop_at_memorization = false;

  void validate() const;
  ModelConfig model(const TaskSpec& task) const;
};

enum class Profile { kPaper, kCi };

const char* to_string(Profile profile);
Profile parse_profile(const std::string& name);
// Paper profile: the defaults above. CI profile: p = 23, batch 64, weight
// decay 2 and a 5000-epoch cap, a few minutes on one core.
TrainConfig profile_config(Profile profile);
TaskSpec profile_task(Profile profile, TaskId task);

nlohmann::json to_json(const TrainConfig& cfg);
nlohmann::json to_json(const TaskSpec& task);
// Missing keys keep the values already in `base`.
TrainConfig train_config_from_json(const nlohmann::json& j, TrainConfig base = {});
TaskSpec task_spec_from_json(const nlohmann::json& j);

// Metrics of one evaluation that the memorized/grokked/final comparisons use.
struct Marker {
  std::int64_t epoch = 0;
  std::int64_t step = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
  double train_acc = 0.0;
  double val_acc = 0.0;
  double lar = 0.0;
  double k_pred = 0.0;
  std::size_t k95 = 0;
  std::size_t k95_centered = 0;
  double sigma_p = 0.0;
  double sigma_q = 0.0;
  std::optional<double> corr_pq;
  std::vector<double> p;
  std::vector<double> q;
};

nlohmann::json to_json(const Marker& marker);
Marker marker_from_json(const nlohmann::json& j);

struct RunResult {
  TaskSpec task;
  TrainConfig config;
  MetricTrace trace;
  Marker init;
  std::optional<Marker> memorized;
  std::optional<Marker> grokked;
  Marker final;
  std::int64_t epochs = 0;
  std::int64_t steps = 0;
  std::size_t train_size = 0;
  std::size_t val_size = 0;
};

nlohmann::json to_json(const RunResult& result);

struct RunOptions {
  // When set, config.json, trace.csv, checkpoints/ and result.json are
  // written here.
  std::optional<std::filesystem::path> run_dir;
  // Evaluate after every epoch up to this one, in addition to the regular
  // schedule.
  std::int64_t dense_eval_until = 0;
  std::function<void(const TraceRow&)> on_eval;
};

// Trains a float model and logs the unembedding alignment against the final
// LayerNorm outputs over the whole train set at every evaluation.
RunResult run_experiment(const TaskSpec& task, const TrainConfig& cfg,
                         const RunOptions& options = {});

// Loss and exact-match accuracy of `model` over `examples`.
struct SplitMetrics {
  double loss = 0.0;
  double accuracy = 0.0;
};
SplitMetrics evaluate(const Transformer<float>& model, const std::vector<Example>& examples,
                      DenseMatrix* hidden = nullptr);

struct BatchDipRow {
  std::uint32_t prime = 0;
  double fraction = 0.0;
  std::size_t batch_size = 0;
  std::size_t train_size = 0;
  double ratio = 0.0;          // batch / train set size
  double min_lar_early = 0.0;  // over epochs 1..early_epochs
  double max_lar_later = 0.0;  // over evaluations after early_epochs
  std::int64_t epochs = 0;
};

// batch_sizes of 0 mean full batch.
std::vector<BatchDipRow> batch_dip_sweep(const std::vector<std::uint32_t>& primes,
                                         const std::vector<double>& fractions,
                                         const std::vector<std::size_t>& batch_sizes,
                                         const TrainConfig& base, std::int64_t early_epochs = 10,
                                         std::int64_t total_epochs = 200);

}  // namespace larlens::grokkit
