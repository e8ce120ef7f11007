#include "sectorlab/collapse.hpp"

#include <cmath>

#include "sectorlab/functions.hpp"
#include "sectorlab/inequalities.hpp"
#include "sectorlab/maps.hpp"
#include "sectorlab/sector.hpp"

namespace sectorlab {

namespace {

CollapseRow row(const char* sector_id, const CheckOutcome& s, const char* ancestor_id, double ancestor_residual,
                bool ancestor_pass) {
  CollapseRow r;
  r.sector_id = sector_id;
  r.ancestor_id = ancestor_id;
  r.sector_residual = s.residual;
  r.sector_pass = s.pass;
  r.ancestor_residual = ancestor_residual;
  r.ancestor_pass = ancestor_pass;
  return r;
}

CollapseRow row(const char* sector_id, const CheckOutcome& s, const char* ancestor_id, const CheckOutcome& a) {
  return row(sector_id, s, ancestor_id, a.residual, a.pass);
}

CollapseRow row(const char* sector_id, const CheckOutcome& s, const char* ancestor_id, const Link& a) {
  return row(sector_id, s, ancestor_id, a.residual, a.holds());
}

// Kubo-Ando mean of positive definite matrices by spectral calculus only.
Hermitian hermitian_mean(const Hermitian& a, const Hermitian& b, const Mean& m) {
  const Hermitian half = hermitian_power(a, 0.5);
  const Hermitian inv_half = hermitian_power(a, -0.5);
  const Hermitian inner(inv_half.matrix() * b.matrix() * inv_half.matrix());
  const Hermitian f = apply_hermitian_function(inner, m.representing());
  return Hermitian(half.matrix() * f.matrix() * half.matrix());
}

}  // namespace

std::vector<CollapseRow> collapse_rows(std::uint64_t seed, int dim, const TolerancePolicy& tol) {
  Rng rng(seed);
  GeneratorConfig g;
  g.dim = dim;
  g.theta = 0.0;
  auto draw = [&] { return random_sector(g, rng); };
  const SectorMatrix a = draw(), b = draw(), c = draw(), d = draw();
  std::uniform_real_distribution<double> w(0.1, 2.0), unit(0.05, 0.95), neg(-0.975, -0.025);
  const double alpha = w(rng), beta = w(rng), r = unit(rng), q = neg(rng);

  std::vector<CollapseRow> rows;
  rows.push_back(row("t0_303", check_t0_303(a, b, c, d, alpha, beta, r, tol), "chan301",
                     check_chan301(a.re(), b.re(), c.re(), d.re(), alpha, beta, r, tol)));
  rows.push_back(row("e305", check_305(a, b, c, d, alpha, beta, q, tol), "t1_308",
                     check_t1_308(a.re(), b.re(), c.re(), d.re(), alpha, beta, q, tol)));

  const CheckOutcome e41 = check_41(a.re(), b.re(), tol);
  rows.push_back(row("t2", check_t2(a, b, tol), "e41:lower", *e41.link("lower")));
  rows.push_back(row("t3v1", check_t3(a, b, T3Variant::One, tol), "e41:upper", *e41.link("upper")));
  rows.push_back(row("t3v2", check_t3(a, b, T3Variant::Two, tol), "e41:upper", *e41.link("upper")));

  const ScalarFunction f = power_function(0.5);
  const PositiveMap phi = parse_map("cyclic", dim);
  rows.push_back(row("t4", check_t4(f, phi, a, b, tol), "e39", check_39(f, phi, a.re(), b.re(), tol)));

  // Spectral bounds (1, 3) on the real parts, then the norm bound K^{1/2}.
  GeneratorConfig gb = g;
  gb.re_bounds = std::make_pair(1.0, 3.0);
  const SectorMatrix x = random_sector(gb, rng), y = random_sector(gb, rng);
  const MeanTriple means{make_mean("arithmetic"), make_mean("geometric"), make_mean("harmonic")};
  const PositiveMap id = PositiveMap::identity(dim);
  const CheckOutcome k = check_K(id, x, y, 1.0, 3.0, means, tol);
  const Hermitian s1 = hermitian_mean(x.re(), y.re(), means.sigma1);
  const Hermitian s2 = hermitian_mean(x.re(), y.re(), means.sigma2);
  const double value =
      norm(hadamard(hermitian_power(s1, 0.5), hermitian_power(s2, -0.5)).matrix(), NormKind::Spectral);
  const double bound = std::sqrt(kantorovich(1.0, 3.0));
  const double slack = tol.bound(std::max(value, bound));
  rows.push_back(row("thmK", k, "kantorovich-norm", bound - value, bound - value >= -slack));
  return rows;
}

}  // namespace sectorlab
