#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mmfa/data.hpp"
#include "mmfa/tensor.hpp"

namespace mmfa::transforms {

using data::Series;

enum class Modality { raw, dft, cwt, gadf, rp, sfa };
enum class Wavelet { db1, dmey, coif5 };

std::string_view to_string(Modality m);
std::string_view to_string(Wavelet w);
Modality parse_modality(std::string_view s);
Wavelet parse_wavelet(std::string_view s);

// Two-sided DFT magnitude per channel: out(c, k) = |sum_t x(c, t) exp(-2 pi i k t / T)|.
Eigen::MatrixXd dft_view(const Series& x);

// High-pass decomposition filter of the wavelet family.
std::span<const double> wavelet_filter(Wavelet w);

// Zero-order-hold dilation of the wavelet filter to `scale`, renormalized to unit L2 norm.
std::vector<double> dilated_filter(Wavelet w, double scale);

// Dyadic scale grid a_s = 2^(s * max_octave / n_scales), s = 1..n_scales.
// max_octave defaults to the largest octave whose dilated filter still fits in `length`.
std::vector<double> cwt_scales(Wavelet w, std::size_t length, std::size_t n_scales,
                               std::optional<double> max_octave = std::nullopt);

// Scalogram D x n_scales x T: same-length, zero-padded, centered correlation of
// each channel with the dilated filter at each scale.
Tensor3 cwt_view(const Series& x, Wavelet w, std::size_t n_scales,
                 std::optional<double> max_octave = std::nullopt);

// Gramian angular difference field, D x T x T. Throws NumericError on a constant channel.
Tensor3 gadf_view(const Series& x);

// Unthresholded recurrence plot |x_i - x_j|, D x T x T.
Tensor3 rp_view(const Series& x);

// Corner-aligned bilinear resampling.
Eigen::MatrixXd resize_bilinear(const Eigen::MatrixXd& m, std::size_t rows, std::size_t cols);
Tensor3 resize_bilinear(const Tensor3& t, std::size_t rows, std::size_t cols);

// ---------------------------------------------------------------------------
// Symbolic Fourier approximation

struct SfaParams {
  std::size_t window_len = 0;  // 0 selects min(T, 16)
  std::size_t word_len = 4;
  std::size_t alphabet_size = 8;
};

// Linear-interpolation empirical quantile of an already sorted sample.
double sorted_quantile(std::span<const double> sorted, double q);

class SfaModel {
 public:
  static constexpr std::int32_t kPad = 0;
  static constexpr std::int32_t kMask = 1;
  static constexpr std::int32_t kSep = 2;
  static constexpr std::int32_t kUnknown = 3;
  static constexpr std::int32_t kFirstWord = 4;

  SfaModel() = default;

  // Multiple coefficient binning over every sliding window of every channel in `train`.
  static SfaModel fit(const data::TimeSeriesDataset& train, SfaParams params = {});

  bool fitted() const noexcept { return fitted_; }
  std::size_t window_len() const noexcept { return window_len_; }
  std::size_t word_len() const noexcept { return word_len_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t stride() const noexcept { return std::max<std::size_t>(1, window_len_ / 2); }
  // word_len x (alphabet_size - 1), rows non-decreasing.
  const Eigen::MatrixXd& bin_edges() const noexcept { return edges_; }
  std::size_t vocab_size() const noexcept { return kFirstWord + words_.size(); }

  // Retained DFT slots of one window: Re X1, Im X1, Re X2, Im X2, ... (DC excluded).
  std::vector<double> coefficients(std::span<const double> window) const;
  std::vector<int> quantize(std::span<const double> coefficients) const;
  std::int32_t token_for(const std::vector<int>& word) const;

  // Per-channel word tokens joined by kSep; length D * windows + D - 1.
  std::vector<std::int32_t> transform(const Series& x) const;

  nlohmann::json to_json() const;
  static SfaModel from_json(const nlohmann::json& j);

 private:
  std::uint64_t word_code(const std::vector<int>& word) const;

  bool fitted_ = false;
  std::size_t window_len_ = 0;
  std::size_t word_len_ = 0;
  std::size_t alphabet_size_ = 0;
  Eigen::MatrixXd edges_;
  std::vector<std::uint64_t> words_;  // sorted word codes; token = kFirstWord + index
  std::unordered_map<std::uint64_t, std::int32_t> token_of_;
};

// Number of sliding windows per channel for a series of length t.
std::size_t sfa_window_count(std::size_t t, std::size_t window_len, std::size_t stride);

// ---------------------------------------------------------------------------
// View specification and materialized views

struct TransformSpec {
  Modality modality = Modality::dft;
  Wavelet wavelet = Wavelet::db1;
  std::size_t n_scales = 16;
  std::size_t image_size = 64;  // d_h = d_w
  std::size_t max_channels = 64;
  SfaParams sfa;

  // Table-style name: "dft", "rp", "gadf", "cwt-db1", "sfa", ...
  std::string key() const;
  nlohmann::json to_json() const;
  static TransformSpec from_json(const nlohmann::json& j);
  // Parses a key produced by key(), keeping the remaining defaults.
  static TransformSpec from_key(std::string_view key);
};

struct ModalView {
  Modality modality = Modality::raw;
  std::vector<std::int64_t> shape;  // dft: {D, T}; images: {D', h, w}; sfa: {L}
  std::vector<double> values;       // empty for sfa
  std::vector<std::int32_t> tokens;  // sfa only

  bool operator==(const ModalView&) const = default;
};

// Applies the transform and, for image modalities, channel pooling and resizing.
ModalView compute_view(const Series& x, const TransformSpec& spec, const SfaModel* sfa = nullptr);

}  // namespace mmfa::transforms
