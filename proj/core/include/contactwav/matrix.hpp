#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace contactwav {

// Dense row-major matrix of doubles. Spectrograms use rows = frequency or mel
// bins (low to high), columns = time frames.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * std::size_t(c), 0.0) {}

  double& operator()(int r, int c) { return data[std::size_t(r) * cols + c]; }
  double operator()(int r, int c) const { return data[std::size_t(r) * cols + c]; }

  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }
};

struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::complex<double>> data;

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c)
      : rows(r), cols(c), data(std::size_t(r) * std::size_t(c)) {}

  std::complex<double>& operator()(int r, int c) {
    return data[std::size_t(r) * cols + c];
  }
  const std::complex<double>& operator()(int r, int c) const {
    return data[std::size_t(r) * cols + c];
  }
};

}  // namespace contactwav
