#pragma once

#include <torch/torch.h>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mmfa/data.hpp"
#include "mmfa/encoders.hpp"
#include "mmfa/eval.hpp"
#include "mmfa/objective.hpp"
#include "mmfa/trainer.hpp"
#include "mmfa/transforms.hpp"
#include "mmfa/view_cache.hpp"

namespace mmfa::pipeline {

// One run: data source, modalities, every module's parameters, output location
// and the seed all randomness derives from. Serialized as a flat JSON object
// whose keys are dotted paths ("trainer.batch_size").
struct RunConfig {
  std::string dataset_format = "uea";  // uea | synthetic | table
  std::string dataset_name;
  std::filesystem::path train_path;
  std::filesystem::path test_path;
  bool pad_unequal = false;
  std::size_t synthetic_n_per_class = 32;
  std::size_t synthetic_test_n_per_class = 32;
  std::size_t synthetic_channels = 2;
  std::size_t synthetic_length = 64;
  std::size_t window = 100;  // table format
  std::size_t stride = 50;

  // Candidate keys; empty means "select the top 3 automatically".
  std::vector<std::string> modalities;

  transforms::TransformSpec transform;  // modality/wavelet ignored
  encoders::EncoderConfig encoder;
  objective::ObjectiveConfig objective;
  trainer::TrainerConfig trainer;  // seed and active_modalities are filled from the run

  std::int64_t select_budget = 200;
  std::string select_metric = "silhouette";
  std::vector<std::string> select_candidates = trainer::kCandidateOrder;

  eval::Task task = eval::Task::classification;
  std::optional<double> contamination;
  std::string probe_kernel = "rbf";

  std::size_t spectral_knn = 5;
  double spectral_sigma = 0.0;
  std::size_t spectral_d = 4;
  std::size_t spectral_samples = 40;
  double spectral_tolerance = 1e-8;

  std::filesystem::path out = "runs";
  std::string name = "run";
  std::uint64_t seed = 0;

  // Throws ConfigError listing every unknown key, ill-typed value and violated
  // constraint. Relative paths resolve against base_dir.
  static RunConfig from_json(const nlohmann::json& flat, const std::filesystem::path& base_dir = {});
  // Applies one "key=value" override; value is parsed as JSON when possible.
  void set(const std::string& key, const nlohmann::json& value);
  nlohmann::json to_json() const;
  void validate() const;
  // Identifies trained weights: excludes output location, test path, eval.* and spectral.*.
  std::uint64_t hash() const;
  std::filesystem::path run_dir() const { return out / name; }
};

RunConfig load_config(const std::filesystem::path& path);

// Normalized splits (channel statistics from train).
struct Splits {
  data::TimeSeriesDataset train;
  data::TimeSeriesDataset test;
  std::optional<double> train_anomaly_ratio;
};

Splits load_splits(const RunConfig& cfg);

torch::Tensor raw_tensor(const data::TimeSeriesDataset& ds, torch::Dtype dtype = torch::kFloat);

// Model inputs for one candidate over a split: dense views are standardized by a
// single scale fitted on the train split; token views are padded to the longest
// sequence.
struct PreparedView {
  encoders::ViewGeometry geometry;
  torch::Tensor input;
  double mean = 0.0;
  double scale = 1.0;
};

struct ViewContext {
  std::optional<transforms::SfaModel> sfa;
  transforms::ViewCache cache;
  transforms::ViewCache::Stats stats;
};

ViewContext make_view_context(const RunConfig& cfg, const data::TimeSeriesDataset& train);
PreparedView prepare_view(const RunConfig& cfg, const std::string& key, const data::TimeSeriesDataset& train,
                          ViewContext& ctx);

// Fresh bundle for the main encoder plus one extractor per view. Initialization
// of each extractor depends only on (seed, key); pretrained token extractors are
// trained on the split's token corpus.
encoders::EncoderBundle build_bundle(const RunConfig& cfg, const data::TimeSeriesDataset& train,
                                     const std::vector<PreparedView>& views);

// Main encoder with the architecture recorded for a run, parameters uninitialized.
encoders::ExtractorPtr make_main_encoder(const RunConfig& cfg, std::int64_t channels, std::int64_t length);

// Commands. Each writes under cfg.run_dir() and logs progress to `log`.
void cmd_transform(const RunConfig& cfg, std::ostream& log);
trainer::SelectionReport cmd_select(const RunConfig& cfg, std::ostream& log);
trainer::TrainResult cmd_train(const RunConfig& cfg, std::ostream& log);
nlohmann::json cmd_verify_spectral(const RunConfig& cfg, std::ostream& log);
eval::EvalReport cmd_eval(const RunConfig& cfg, std::ostream& log);
std::string cmd_tabulate(const std::vector<std::filesystem::path>& run_dirs);

// Main-encoder embeddings of a split using only ckpt/main.bin and ckpt/projection.bin.
eval::Matrix encode_with_checkpoint(const RunConfig& cfg, const data::TimeSeriesDataset& ds);

}  // namespace mmfa::pipeline
