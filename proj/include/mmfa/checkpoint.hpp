#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace mmfa::checkpoint {

// "MMFACKPT", u32 version, u64 config hash, u32 n_params, then per parameter:
// u32 name length, name bytes, u32 rank, i64 dims[rank], f64 values[]. Host byte order.
inline constexpr std::uint32_t kVersion = 1;

struct Manifest {
  std::uint64_t config_hash = 0;
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> params;
};

std::string serialize(const torch::nn::Module& module, std::uint64_t config_hash);
void save(const torch::nn::Module& module, const std::filesystem::path& path, std::uint64_t config_hash);

// Copies stored values into the module's parameters. Throws DependencyError for a
// missing file, ParseError for a malformed one, ShapeError when names or shapes
// disagree with the module. Returns the stored config hash.
std::uint64_t load(torch::nn::Module& module, const std::filesystem::path& path);

Manifest read_manifest(const std::filesystem::path& path);

}  // namespace mmfa::checkpoint
