#pragma once

#include <cstdint>
#include <cstring>
#include <string_view>
#include <type_traits>

namespace mmfa {

// 64-bit FNV-1a, incremental.
class Fnv1a {
 public:
  Fnv1a& bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      state_ ^= p[i];
      state_ *= 0x100000001b3ULL;
    }
    return *this;
  }

  Fnv1a& str(std::string_view s) {
    const auto n = static_cast<std::uint64_t>(s.size());
    bytes(&n, sizeof n);
    return bytes(s.data(), s.size());
  }

  template <typename T>
    requires std::is_arithmetic_v<T>
  Fnv1a& value(T v) {
    return bytes(&v, sizeof v);
  }

  std::uint64_t digest() const noexcept { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace mmfa
