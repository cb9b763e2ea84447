// Built with -mavx2 -mfma; only reached through the dispatch table after a
// runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "sseamp/kernels.hpp"

namespace sseamp::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// 4 rows x 8 columns of c, accumulated over all k.
inline void tile_4x8(std::size_t n, const double* a, const double* b, double* c, std::size_t i0, std::size_t j0) {
  __m256d c00 = _mm256_setzero_pd(), c01 = _mm256_setzero_pd();
  __m256d c10 = _mm256_setzero_pd(), c11 = _mm256_setzero_pd();
  __m256d c20 = _mm256_setzero_pd(), c21 = _mm256_setzero_pd();
  __m256d c30 = _mm256_setzero_pd(), c31 = _mm256_setzero_pd();
  const double* a0 = a + (i0 + 0) * n;
  const double* a1 = a + (i0 + 1) * n;
  const double* a2 = a + (i0 + 2) * n;
  const double* a3 = a + (i0 + 3) * n;
  for (std::size_t k = 0; k < n; ++k) {
    const double* brow = b + k * n + j0;
    const __m256d b0 = _mm256_loadu_pd(brow);
    const __m256d b1 = _mm256_loadu_pd(brow + 4);
    __m256d x = _mm256_broadcast_sd(a0 + k);
    c00 = _mm256_fmadd_pd(x, b0, c00);
    c01 = _mm256_fmadd_pd(x, b1, c01);
    x = _mm256_broadcast_sd(a1 + k);
    c10 = _mm256_fmadd_pd(x, b0, c10);
    c11 = _mm256_fmadd_pd(x, b1, c11);
    x = _mm256_broadcast_sd(a2 + k);
    c20 = _mm256_fmadd_pd(x, b0, c20);
    c21 = _mm256_fmadd_pd(x, b1, c21);
    x = _mm256_broadcast_sd(a3 + k);
    c30 = _mm256_fmadd_pd(x, b0, c30);
    c31 = _mm256_fmadd_pd(x, b1, c31);
  }
  double* r0 = c + (i0 + 0) * n + j0;
  double* r1 = c + (i0 + 1) * n + j0;
  double* r2 = c + (i0 + 2) * n + j0;
  double* r3 = c + (i0 + 3) * n + j0;
  _mm256_storeu_pd(r0, c00);
  _mm256_storeu_pd(r0 + 4, c01);
  _mm256_storeu_pd(r1, c10);
  _mm256_storeu_pd(r1 + 4, c11);
  _mm256_storeu_pd(r2, c20);
  _mm256_storeu_pd(r2 + 4, c21);
  _mm256_storeu_pd(r3, c30);
  _mm256_storeu_pd(r3 + 4, c31);
}

inline void tile_1x8(std::size_t n, const double* a, const double* b, double* c, std::size_t i, std::size_t j0) {
  __m256d c0 = _mm256_setzero_pd(), c1 = _mm256_setzero_pd();
  const double* arow = a + i * n;
  for (std::size_t k = 0; k < n; ++k) {
    const double* brow = b + k * n + j0;
    const __m256d x = _mm256_broadcast_sd(arow + k);
    c0 = _mm256_fmadd_pd(x, _mm256_loadu_pd(brow), c0);
    c1 = _mm256_fmadd_pd(x, _mm256_loadu_pd(brow + 4), c1);
  }
  _mm256_storeu_pd(c + i * n + j0, c0);
  _mm256_storeu_pd(c + i * n + j0 + 4, c1);
}

}  // namespace

void gemm(std::size_t n, std::span<const double> a_span, std::span<const double> b_span, std::span<double> c_span) {
  const double* a = a_span.data();
  const double* b = b_span.data();
  double* c = c_span.data();
  const std::size_t j_vec = n - n % 8;
  const std::size_t i_vec = n - n % 4;

  for (std::size_t j0 = 0; j0 < j_vec; j0 += 8) {
    for (std::size_t i0 = 0; i0 < i_vec; i0 += 4) tile_4x8(n, a, b, c, i0, j0);
    for (std::size_t i = i_vec; i < n; ++i) tile_1x8(n, a, b, c, i, j0);
  }
  // Remaining columns.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = j_vec; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += a[i * n + k] * b[k * n + j];
      c[i * n + j] = acc;
    }
  }
}

void gemv(std::size_t n, std::span<const double> a, std::span<const double> x, std::span<double> y) {
  const std::size_t j_vec = n - n % 8;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a.data() + i * n;
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    for (std::size_t j = 0; j < j_vec; j += 8) {
      acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x.data() + j), acc0);
      acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(row + j + 4), _mm256_loadu_pd(x.data() + j + 4), acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (std::size_t j = j_vec; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  const std::size_t j_vec = n - n % 8;
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  for (std::size_t j = 0; j < j_vec; j += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + j), _mm256_loadu_pd(y.data() + j), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + j + 4), _mm256_loadu_pd(y.data() + j + 4), acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (std::size_t j = j_vec; j < n; ++j) acc += x[j] * y[j];
  return acc;
}

void scale_outer(std::size_t n, std::span<const double> s, std::span<double> a) {
  const std::size_t j_vec = n - n % 4;
  for (std::size_t i = 0; i < n; ++i) {
    double* row = a.data() + i * n;
    const __m256d si = _mm256_set1_pd(s[i]);
    for (std::size_t j = 0; j < j_vec; j += 4) {
      const __m256d v = _mm256_mul_pd(_mm256_mul_pd(si, _mm256_loadu_pd(row + j)), _mm256_loadu_pd(s.data() + j));
      _mm256_storeu_pd(row + j, v);
    }
    for (std::size_t j = j_vec; j < n; ++j) row[j] = s[i] * row[j] * s[j];
  }
}

}  // namespace sseamp::kernels::avx2
