#include "sectorlab/kernels.hpp"

namespace sectorlab::kernels {
namespace {

void cmul(const cdouble* a, const cdouble* b, cdouble* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = cdouble(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void cscale(cdouble s, const cdouble* x, cdouble* out, std::size_t n) {
  const double sr = s.real(), si = s.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    out[i] = cdouble(sr * xr - si * xi, sr * xi + si * xr);
  }
}

double sumsq(const cdouble* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real();
    acc += x[i].imag() * x[i].imag();
  }
  return acc;
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{"scalar", &cmul, &cscale, &sumsq};
  return table;
}

}  // namespace sectorlab::kernels
