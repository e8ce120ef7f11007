#pragma once

// Entrywise complex kernels behind hadamard(), kronecker() and the
// Frobenius norm. Every variant is bit-compatible with the scalar
// reference for cmul/cscale; sumsq may differ by reduction order only.

#include <complex>
#include <cstddef>
#include <string_view>

namespace sectorlab::kernels {

using cdouble = std::complex<double>;

struct KernelTable {
  std::string_view name;
  /// out[i] = a[i] * b[i]
  void (*cmul)(const cdouble* a, const cdouble* b, cdouble* out, std::size_t n);
  /// out[i] = s * x[i]
  void (*cscale)(cdouble s, const cdouble* x, cdouble* out, std::size_t n);
  /// sum |x[i]|^2
  double (*sumsq)(const cdouble* x, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table() noexcept;

/// Resolved once: AVX2 when available unless SECTORLAB_SIMD=scalar.
const KernelTable& active() noexcept;

}  // namespace sectorlab::kernels
