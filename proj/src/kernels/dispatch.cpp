#include <cstdlib>
#include <string_view>

#include "sseamp/kernels.hpp"

namespace sseamp::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, scalar::gemm, scalar::gemv, scalar::dot, scalar::scale_outer};

#if defined(SSEAMP_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, avx2::gemm, avx2::gemv, avx2::dot, avx2::scale_outer};
#endif

const KernelTable& select_active() noexcept {
  if (const char* env = std::getenv("SSE_AMPLIFY_SIMD"); env && std::string_view(env) == "scalar") {
    return kScalar;
  }
  return table(Isa::Avx2);
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(SSEAMP_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) noexcept {
#if defined(SSEAMP_HAVE_AVX2)
  if (isa == Isa::Avx2 && available(Isa::Avx2)) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

const KernelTable& active() noexcept {
  static const KernelTable& selected = select_active();
  return selected;
}

}  // namespace sseamp::kernels
