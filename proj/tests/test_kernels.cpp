#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "sectorlab/kernels.hpp"

using namespace sectorlab::kernels;

namespace {

std::vector<cdouble> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cdouble> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

bool same_bits(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(cdouble)) == 0;
}

}  // namespace

TEST_CASE("scalar kernels compute entrywise products") {
  const KernelTable& s = scalar_table();
  std::vector<cdouble> a{{1, 1}, {2, 0}}, b{{1, 1}, {0, 3}}, out(2);
  s.cmul(a.data(), b.data(), out.data(), 2);
  CHECK(out[0] == cdouble(0, 2));
  CHECK(out[1] == cdouble(0, 6));
  s.cscale({0, 1}, a.data(), out.data(), 2);
  CHECK(out[0] == cdouble(-1, 1));
  CHECK(s.sumsq(a.data(), 2) == doctest::Approx(6.0));
}

TEST_CASE("active kernel table is one of the compiled variants") {
  const KernelTable& act = active();
  const KernelTable* avx = avx2_table();
  CHECK((&act == &scalar_table() || (avx != nullptr && &act == avx)));
}

TEST_CASE("avx2 kernels match the scalar reference bit for bit") {
  const KernelTable* avx = avx2_table();
  if (avx == nullptr) {
    MESSAGE("AVX2 variant unavailable on this machine; skipped");
    return;
  }
  const KernelTable& s = scalar_table();
  std::mt19937_64 rng(42);
  for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 16u, 33u, 64u, 101u}) {
    auto a = random_vec(n, rng), b = random_vec(n, rng);
    std::vector<cdouble> r1(n), r2(n);
    s.cmul(a.data(), b.data(), r1.data(), n);
    avx->cmul(a.data(), b.data(), r2.data(), n);
    CHECK(same_bits(r1, r2));
    cdouble sc(0.3, -1.7);
    s.cscale(sc, a.data(), r1.data(), n);
    avx->cscale(sc, a.data(), r2.data(), n);
    CHECK(same_bits(r1, r2));
    double q1 = s.sumsq(a.data(), n), q2 = avx->sumsq(a.data(), n);
    CHECK(std::abs(q1 - q2) <= 1e-14 * (1.0 + q1));
  }
}
