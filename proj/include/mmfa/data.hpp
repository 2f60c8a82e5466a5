#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmfa/tensor.hpp"

namespace mmfa::data {

// One multivariate sample: rows are channels, columns are timestamps.
using Series = Eigen::MatrixXd;

// N equal-length samples of D channels and T timestamps, optionally labeled.
struct TimeSeriesDataset {
  std::string name;
  std::vector<Series> samples;
  std::optional<std::vector<int>> labels;
  // Class names indexed by label id, in first-appearance order.
  std::vector<std::string> class_names;
  std::vector<std::string> channel_names;

  std::size_t size() const noexcept { return samples.size(); }
  Eigen::Index channels() const { return samples.empty() ? 0 : samples.front().rows(); }
  Eigen::Index length() const { return samples.empty() ? 0 : samples.front().cols(); }
  int num_classes() const;

  // Throws ShapeError when N, D, T or label counts break the dataset invariants.
  void validate() const;

  TimeSeriesDataset subset(const std::vector<std::size_t>& indices) const;
};

struct UeaParseOptions {
  // Right-pad shorter records with each channel's last value instead of failing.
  bool pad_unequal = false;
  // Label ids to assign first (e.g. the train split's class_names) so that
  // train and test files share one mapping. Unlisted labels follow in
  // first-appearance order.
  std::vector<std::string> class_order;
};

TimeSeriesDataset parse_uea_ts(std::istream& in, const UeaParseOptions& options = {});
TimeSeriesDataset parse_uea_ts(std::string_view text, const UeaParseOptions& options = {});
TimeSeriesDataset load_uea_ts(const std::filesystem::path& path, const UeaParseOptions& options = {});

// Writes a dataset in the .ts layout that parse_uea_ts reads back exactly.
void write_uea_ts(std::ostream& out, const TimeSeriesDataset& dataset);
std::string to_uea_ts(const TimeSeriesDataset& dataset);

// A single labeled stream for anomaly detection: D x T values, one 0/1 label per timestamp.
struct LabeledStream {
  Series values;
  std::vector<int> point_labels;
};

// Comma-separated rows, one per timestamp, last column is the 0/1 label.
// A non-numeric first row is treated as a header.
LabeledStream parse_numeric_table(std::istream& in);
LabeledStream parse_numeric_table(std::string_view text);
LabeledStream load_numeric_table(const std::filesystem::path& path);

struct WindowedSeries {
  std::vector<Series> windows;  // each D x w
  std::vector<int> window_labels;
  std::size_t stride = 1;
};

WindowedSeries make_windows(const Series& series, const std::vector<int>& point_labels,
                            std::size_t window, std::size_t stride);

// Averages contiguous channel groups so that at most max_channels remain.
Tensor3 channel_pool(const Tensor3& features, std::size_t max_channels);

// Two-class sinusoid corpus: class 0 in a low frequency band, class 1 in a high band.
TimeSeriesDataset make_synthetic(std::size_t n_per_class, std::size_t channels, std::size_t length,
                                 std::uint64_t seed);

// Frequency bands (in cycles per series) used by make_synthetic.
struct SyntheticBands {
  double low_min, low_max, high_min, high_max;
};
SyntheticBands synthetic_bands(std::size_t length);

// Per-channel z-normalization with statistics from a reference split.
class ChannelNormalizer {
 public:
  static ChannelNormalizer fit(const TimeSeriesDataset& train);

  Series apply(const Series& sample) const;
  TimeSeriesDataset apply(const TimeSeriesDataset& dataset) const;

  const Eigen::VectorXd& mean() const noexcept { return mean_; }
  const Eigen::VectorXd& stddev() const noexcept { return stddev_; }

 private:
  Eigen::VectorXd mean_;
  Eigen::VectorXd stddev_;
};

// FNV-1a over shape, values and labels; identifies a dataset's contents.
std::uint64_t fingerprint(const TimeSeriesDataset& dataset);

}  // namespace mmfa::data
