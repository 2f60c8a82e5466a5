#pragma once

#include <torch/torch.h>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mmfa/data.hpp"
#include "mmfa/transforms.hpp"

namespace mmfa::encoders {

struct EncoderConfig {
  std::int64_t d_e = 128;
  std::int64_t d_z = 64;

  // Shapelet lengths are ceil(fraction * T).
  std::vector<double> shapelet_fractions{0.1, 0.2, 0.4};
  std::int64_t shapelets_per_length = 10;
  bool slnn_per_channel = false;

  std::int64_t resnet_width = 8;
  std::int64_t resnet_blocks = 3;

  std::int64_t token_dim = 32;
  std::int64_t token_heads = 4;
  std::int64_t token_layers = 2;
  std::int64_t token_ff = 64;
  std::int64_t max_tokens = 256;

  // Masked-token pretraining for "sfa-pretrained".
  std::int64_t pretrain_steps = 200;
  double mask_prob = 0.15;
  double pretrain_lr = 1e-3;

  void validate() const;
  nlohmann::json to_json() const;
  static EncoderConfig from_json(const nlohmann::json& j);
};

// A feature extractor f: a batch of inputs to a batch of d_e-wide vectors.
class Extractor : public torch::nn::Module {
 public:
  virtual torch::Tensor forward(const torch::Tensor& x) = 0;
  virtual std::int64_t out_dim() const = 0;
};

using ExtractorPtr = std::shared_ptr<Extractor>;

// Learnable shapelets with sliding mean-squared distance, min-pooled over time,
// followed by an affine head. Input B x D x T.
class SlnnEncoder : public Extractor {
 public:
  SlnnEncoder(std::int64_t channels, std::int64_t length, std::vector<std::int64_t> shapelet_lengths,
              std::int64_t per_length, std::int64_t d_e, bool per_channel);

  // Shapelet lengths ceil(f * T) for each fraction, deduplicated, clamped to [1, T].
  static std::vector<std::int64_t> lengths_for(std::int64_t t, const std::vector<double>& fractions);

  // Copies random subsequences of the (channel-averaged) training series into the
  // shapelets, then fits the per-feature standardization applied before the head.
  void init_from_data(const std::vector<data::Series>& samples, std::uint64_t seed);

  // Min-pooled distances before the head: B x n_features.
  torch::Tensor features(const torch::Tensor& x);
  torch::Tensor forward(const torch::Tensor& x) override;
  std::int64_t out_dim() const override { return d_e_; }

  const std::vector<torch::Tensor>& shapelets() const noexcept { return shapelets_; }
  torch::nn::Linear& head() { return head_; }
  std::int64_t n_features() const;

 private:
  std::int64_t channels_, length_, d_e_;
  bool per_channel_;
  std::vector<std::int64_t> lengths_;
  std::vector<torch::Tensor> shapelets_;  // per length: (per_channel ? D * n : n) x l
  torch::nn::Linear head_{nullptr};
  torch::Tensor feature_mean_, feature_scale_;
};

// Residual stack without normalization layers: stride-2 stem, `blocks` two-conv
// residual blocks (the first two further downsample), global average pool, affine.
class ConvResNet : public Extractor {
 public:
  // dims = 1 expects B x C x L; dims = 2 expects B x C x H x W with H = W = spatial.
  ConvResNet(int dims, std::int64_t in_channels, std::int64_t spatial, std::int64_t width, std::int64_t blocks,
             std::int64_t d_e);

  torch::Tensor forward(const torch::Tensor& x) override;
  std::int64_t out_dim() const override { return d_e_; }

 private:
  torch::Tensor conv(std::size_t i, const torch::Tensor& x);

  int dims_;
  std::int64_t in_channels_, spatial_, d_e_;
  torch::nn::ModuleList convs_;
  std::vector<std::int64_t> strides_;
  torch::nn::Linear head_{nullptr};
};

// Token embedding + learned positions, post-norm encoder blocks with
// key-padding masks, masked mean pool, affine to d_e. Input B x L int64,
// kPad marks padding.
class TokenTransformer : public Extractor {
 public:
  TokenTransformer(std::int64_t vocab, std::int64_t max_len, std::int64_t dim, std::int64_t heads,
                   std::int64_t layers, std::int64_t ff, std::int64_t d_e);

  // Per-position final hidden states, B x L x dim.
  torch::Tensor encode(const torch::Tensor& tokens);
  torch::Tensor forward(const torch::Tensor& tokens) override;
  // Vocabulary logits per position, B x L x vocab.
  torch::Tensor mlm_logits(const torch::Tensor& tokens);
  std::int64_t out_dim() const override { return d_e_; }
  std::int64_t vocab() const noexcept { return vocab_; }
  std::int64_t max_len() const noexcept { return max_len_; }

 private:
  struct Layer {
    torch::nn::Linear q{nullptr}, k{nullptr}, v{nullptr}, o{nullptr}, ff1{nullptr}, ff2{nullptr};
    torch::nn::LayerNorm norm1{nullptr}, norm2{nullptr};
  };

  std::int64_t vocab_, max_len_, dim_, heads_, d_e_;
  torch::nn::Embedding embed_{nullptr};
  torch::Tensor positions_;
  std::vector<Layer> layers_;
  torch::nn::Linear head_{nullptr};
  torch::nn::Linear mlm_head_{nullptr};
};

// Masked-position cross-entropy; 0 when no position is masked.
torch::Tensor masked_token_loss(TokenTransformer& model, const torch::Tensor& tokens, double mask_prob,
                                at::Generator& gen);

// Adam on masked-token prediction over the corpus. Returns the per-step losses.
// mask_prob = 0 leaves the parameters untouched.
std::vector<double> pretrain_masked_tokens(TokenTransformer& model, const std::vector<std::vector<std::int32_t>>& corpus,
                                           double mask_prob, std::int64_t steps, std::uint64_t seed, double lr = 1e-3,
                                           std::int64_t batch_size = 8);

// Shared projection z = e W, W of shape d_e x d_z, no bias.
class Projection : public torch::nn::Module {
 public:
  Projection(std::int64_t d_e, std::int64_t d_z);
  torch::Tensor forward(const torch::Tensor& e);
  torch::Tensor& weight() { return w_; }

 private:
  torch::Tensor w_;
};

torch::Tensor project(const torch::Tensor& e, const torch::Tensor& w);

// Input geometry for one modality's extractor.
struct ViewGeometry {
  transforms::TransformSpec spec;
  std::vector<std::int64_t> shape;  // per-sample view shape; {L} for tokens
  std::int64_t vocab = 0;           // token modalities only
  bool pretrained = false;          // token modalities only

  std::string key() const;
  nlohmann::json to_json() const;
  static ViewGeometry from_json(const nlohmann::json& j);
};

ExtractorPtr make_extractor(const ViewGeometry& geometry, const EncoderConfig& cfg);

// The main encoder g = f W, and the modality encoders g_i = f_i W with one shared W.
struct EncoderBundle {
  ExtractorPtr main;
  std::vector<std::string> modal_keys;
  std::vector<ExtractorPtr> modal;
  std::shared_ptr<Projection> projection;

  std::size_t k() const noexcept { return modal.size(); }
  void to(torch::Dtype dtype);
};

}  // namespace mmfa::encoders
