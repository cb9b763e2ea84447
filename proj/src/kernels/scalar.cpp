#include <algorithm>

#include "sseamp/kernels.hpp"

namespace sseamp::kernels {

namespace scalar {

void gemm(std::size_t n, std::span<const double> a, std::span<const double> b, std::span<double> c) {
  constexpr std::size_t kBlock = 64;
  std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n * n), 0.0);
  for (std::size_t kk = 0; kk < n; kk += kBlock) {
    const std::size_t k_end = std::min(kk + kBlock, n);
    for (std::size_t i = 0; i < n; ++i) {
      double* crow = c.data() + i * n;
      for (std::size_t k = kk; k < k_end; ++k) {
        const double aik = a[i * n + k];
        const double* brow = b.data() + k * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
      }
    }
  }
}

void gemv(std::size_t n, std::span<const double> a, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    const double* row = a.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

double dot(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

void scale_outer(std::size_t n, std::span<const double> s, std::span<double> a) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = s[i] * a[i * n + j] * s[j];
  }
}

}  // namespace scalar

void symmetrize(std::size_t n, std::span<double> a) {
  constexpr std::size_t kTile = 32;
  for (std::size_t ii = 0; ii < n; ii += kTile) {
    for (std::size_t jj = ii; jj < n; jj += kTile) {
      const std::size_t i_end = std::min(ii + kTile, n);
      const std::size_t j_end = std::min(jj + kTile, n);
      for (std::size_t i = ii; i < i_end; ++i) {
        for (std::size_t j = std::max(jj, i + 1); j < j_end; ++j) {
          const double m = 0.5 * (a[i * n + j] + a[j * n + i]);
          a[i * n + j] = m;
          a[j * n + i] = m;
        }
      }
    }
  }
}

double max_entry(std::span<const double> a) {
  if (a.empty()) return 0.0;
  return *std::max_element(a.begin(), a.end());
}

}  // namespace sseamp::kernels
