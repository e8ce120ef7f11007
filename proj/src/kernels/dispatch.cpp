#include <cstdlib>
#include <string_view>

#include "sectorlab/kernels.hpp"

namespace sectorlab::kernels {

#if defined(SECTORLAB_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif

const KernelTable* avx2_table() noexcept {
#if defined(SECTORLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported ? &avx2_kernels() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable* const chosen = [] {
    const char* env = std::getenv("SECTORLAB_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_table();
    if (const KernelTable* t = avx2_table()) return t;
    return &scalar_table();
  }();
  return *chosen;
}

}  // namespace sectorlab::kernels
