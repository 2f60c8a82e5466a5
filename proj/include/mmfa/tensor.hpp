#pragma once

#include <cstddef>
#include <vector>

#include "mmfa/errors.hpp"

namespace mmfa {

// Dense row-major channels x rows x cols tensor. Used for image-like views.
struct Tensor3 {
  std::size_t channels = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Tensor3() = default;
  Tensor3(std::size_t c, std::size_t r, std::size_t w, double fill = 0.0)
      : channels(c), rows(r), cols(w), data(c * r * w, fill) {}

  double& operator()(std::size_t c, std::size_t i, std::size_t j) {
    return data[(c * rows + i) * cols + j];
  }
  double operator()(std::size_t c, std::size_t i, std::size_t j) const {
    return data[(c * rows + i) * cols + j];
  }

  std::size_t plane_size() const noexcept { return rows * cols; }
  std::size_t size() const noexcept { return data.size(); }

  bool operator==(const Tensor3&) const = default;
};

}  // namespace mmfa
