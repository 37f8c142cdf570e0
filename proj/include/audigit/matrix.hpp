#pragma once

#include <cstddef>
#include <vector>

namespace audigit {

// Dense row-major matrix of doubles; just enough for the feature pipeline.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const double& at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

}  // namespace audigit
