#pragma once

#include <torch/torch.h>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mmfa/encoders.hpp"
#include "mmfa/eval.hpp"
#include "mmfa/objective.hpp"

namespace mmfa::trainer {

// Candidate combinations in table order; ties in selection resolve to the earlier entry.
inline const std::vector<std::string> kCandidateOrder = {"dft",       "rp",        "gadf",           "cwt-db1",
                                                         "cwt-dmey",  "cwt-coif5", "sfa-pretrained", "sfa-random"};

// Maps aliases ("fft") to candidate keys; throws ConfigError on unknown keys.
std::string canonical_key(const std::string& key);

struct TrainerConfig {
  std::int64_t batch_size = 8;
  double lr = 1e-4;
  // Step size of the alignment update; defaults to lr.
  std::optional<double> step_scale_eps;
  std::int64_t iterations = 1000;
  // Rescales each update group's gradient to at most this L2 norm; 0 disables.
  double grad_clip = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> active_modalities;

  double eps() const { return step_scale_eps.value_or(lr); }
  void validate() const;
};

struct StepRecord {
  std::int64_t step = 0;
  objective::LossBreakdown loss;  // mean over the modality pairs
  std::vector<objective::LossBreakdown> per_modality;
  bool aborted = false;
  std::string diagnostic;

  nlohmann::json to_json() const;
};

// One mini-batch of Algorithm 1. views[i] feeds bundle.modal[i]. For each modality
// the pair [g(X), g_i(X_i)] is scored with k = 1 normalization; modality i steps by
// eps / k immediately, while the main encoder and W accumulate gradients over all
// pairs and step once by eps. A non-finite loss aborts the step without updates.
// grad_clip > 0 bounds the gradient norm of each modality encoder and of the
// main encoder plus W before stepping.
StepRecord align_step(encoders::EncoderBundle& bundle, const torch::Tensor& raw, const std::vector<torch::Tensor>& views,
                      const objective::ObjectiveConfig& objective, double eps, double grad_clip = 0.0);

// Inputs for every training sample: raw is N x D x T, views[i] has N leading rows.
struct TrainingData {
  torch::Tensor raw;
  std::vector<torch::Tensor> views;

  std::int64_t size() const { return raw.defined() ? raw.size(0) : 0; }
};

struct TrainResult {
  std::vector<StepRecord> log;
  std::size_t aborted = 0;
};

// cfg.iterations align_steps over seeded, reshuffled mini-batches (incomplete
// batches are dropped).
TrainResult train(encoders::EncoderBundle& bundle, const TrainingData& data, const TrainerConfig& cfg,
                  const objective::ObjectiveConfig& objective,
                  const std::function<void(const StepRecord&)>& on_step = {});

// Batched forward pass of the main encoder and W, without gradients.
eval::Matrix embed_main(encoders::EncoderBundle& bundle, const torch::Tensor& raw, std::int64_t chunk = 64);
eval::Matrix embed(encoders::Extractor& extractor, encoders::Projection& projection, const torch::Tensor& input,
                   std::int64_t chunk = 64);

eval::Matrix to_eigen(const torch::Tensor& t);
torch::Tensor to_torch(const Eigen::MatrixXd& m, torch::Dtype dtype);

// ---------------------------------------------------------------------------
// Combination selection

struct CandidateScore {
  std::string key;
  double score = -std::numeric_limits<double>::infinity();
  bool undefined = false;
  std::string note;
};

struct SelectionReport {
  std::string metric;
  std::int64_t budget = 0;
  std::vector<CandidateScore> scores;  // in candidate order
  std::vector<std::string> selected;

  nlohmann::json to_json() const;
  static SelectionReport from_json(const nlohmann::json& j);
};

// The n best-scoring keys; equal scores keep candidate order.
std::vector<std::string> top_n(const std::vector<CandidateScore>& scores, std::size_t n = 3);

// Scores every candidate with `scorer`; a TaskError from the scorer marks the
// candidate undefined with score -inf.
SelectionReport select_combinations(const std::vector<std::string>& candidates,
                                    const std::function<double(const std::string&)>& scorer,
                                    const std::string& metric, std::int64_t budget, std::size_t n = 3);

// "silhouette": silhouette of k-means on the embeddings. "nmi": NMI of k-means
// against labels (requires labels).
double embedding_score(const eval::Matrix& z, const std::string& metric, int k, const std::vector<int>* labels,
                       std::uint64_t seed);

}  // namespace mmfa::trainer
