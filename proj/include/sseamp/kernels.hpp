#pragma once

// Dense double-precision kernels behind the walk operator and graph powering.
//
// Every kernel has a scalar reference implementation; AVX2/FMA variants are
// compiled separately and selected at runtime when the CPU supports them.
// Results agree with the scalar reference to rounding, not bit-for-bit: the
// vector paths reassociate sums and fuse multiply-adds.

#include <cstddef>
#include <span>
#include <string_view>

namespace sseamp::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// c = a * b for row-major n x n matrices. c must not alias a or b.
  void (*gemm)(std::size_t n, std::span<const double> a, std::span<const double> b, std::span<double> c);
  /// y = a * x for a row-major n x n matrix.
  void (*gemv)(std::size_t n, std::span<const double> a, std::span<const double> x, std::span<double> y);
  double (*dot)(std::span<const double> x, std::span<const double> y);
  /// a(i, j) <- s(i) * a(i, j) * s(j)
  void (*scale_outer)(std::size_t n, std::span<const double> s, std::span<double> a);
};

/// a <- (a + a^T) / 2. Memory-bound transpose; shared by all ISAs.
void symmetrize(std::size_t n, std::span<double> a);

/// Largest entry of a (0 for empty input).
double max_entry(std::span<const double> a);

bool available(Isa isa) noexcept;

/// Table for a specific ISA; falls back to scalar when unavailable.
const KernelTable& table(Isa isa) noexcept;

/// Best ISA the host supports, unless SSE_AMPLIFY_SIMD=scalar is set.
const KernelTable& active() noexcept;

namespace scalar {
void gemm(std::size_t n, std::span<const double> a, std::span<const double> b, std::span<double> c);
void gemv(std::size_t n, std::span<const double> a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
void scale_outer(std::size_t n, std::span<const double> s, std::span<double> a);
}  // namespace scalar

#if defined(SSEAMP_HAVE_AVX2)
namespace avx2 {
void gemm(std::size_t n, std::span<const double> a, std::span<const double> b, std::span<double> c);
void gemv(std::size_t n, std::span<const double> a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
void scale_outer(std::size_t n, std::span<const double> s, std::span<double> a);
}  // namespace avx2
#endif

}  // namespace sseamp::kernels
