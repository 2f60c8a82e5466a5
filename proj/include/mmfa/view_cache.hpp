#pragma once

#include <filesystem>
#include <vector>

#include "mmfa/data.hpp"
#include "mmfa/transforms.hpp"

namespace mmfa::transforms {

// Binary container for one view: "MMFAVIEW", u32 version, u32 modality,
// u32 rank, i64 shape[rank], u64 n_values, f64 values[], u64 n_tokens, i32 tokens[].
// Host byte order.
inline constexpr std::uint32_t kViewFormatVersion = 1;

void write_view(const std::filesystem::path& path, const ModalView& view);
ModalView read_view(const std::filesystem::path& path);

// Writes `bytes` to `path` through a temporary file and rename.
void atomic_write(const std::filesystem::path& path, const std::string& bytes);

// On-disk cache of transformed views keyed by (dataset fingerprint, transform
// parameters, fitted SFA model). One file per sample, plus a params.json sidecar.
class ViewCache {
 public:
  struct Stats {
    std::size_t hits = 0;
    std::size_t misses = 0;
  };

  explicit ViewCache(std::filesystem::path root);

  // Root from $MMFA_CACHE_DIR, falling back to `fallback`.
  static ViewCache from_env(const std::filesystem::path& fallback);

  const std::filesystem::path& root() const noexcept { return root_; }

  std::filesystem::path entry_dir(const data::TimeSeriesDataset& dataset, const TransformSpec& spec,
                                  const SfaModel* sfa = nullptr) const;

  std::vector<ModalView> get_or_compute(const data::TimeSeriesDataset& dataset, const TransformSpec& spec,
                                        const SfaModel* sfa = nullptr, Stats* stats = nullptr) const;

 private:
  std::filesystem::path root_;
};

// Computes views without caching.
std::vector<ModalView> compute_views(const data::TimeSeriesDataset& dataset, const TransformSpec& spec,
                                     const SfaModel* sfa = nullptr);

}  // namespace mmfa::transforms
