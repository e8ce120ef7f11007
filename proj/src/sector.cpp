#include "sectorlab/sector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sectorlab {

double sector_angle(const Matrix& a) {
  require_square(a, "sector_angle");
  require_finite(a, "sector_angle");
  const Cartesian c = cartesian(a);
  if (!(lambda_min(c.re) > 0.0)) {
    throw Error(ErrorKind::NotAccretive, "sector_angle: not accretive");
  }
  const Hermitian rinv_half = hermitian_power(c.re, -0.5);
  const Hermitian k(rinv_half.matrix() * c.im.matrix() * rinv_half.matrix());
  return std::atan(spectral_norm(k));
}

SectorVerdict in_sector(const Matrix& a, double theta, const TolerancePolicy& tol) {
  require_square(a, "in_sector");
  require_finite(a, "in_sector");
  const Cartesian c = cartesian(a);
  SectorVerdict v;
  const double rmin = lambda_min(c.re);
  if (!(rmin > tol.abs_tol)) {
    v.inside = false;
    v.residual = rmin;
    return v;
  }
  if (!(theta < std::numbers::pi / 2)) {
    v.inside = theta >= 0.0;
    v.residual = rmin;
    return v;
  }
  if (theta < 0.0) {
    v.inside = false;
    v.residual = -1.0;
    return v;
  }
  const double t = std::tan(theta);
  const Hermitian scaled = c.re * t;
  v.residual = std::min(lambda_min(scaled - c.im), lambda_min(scaled + c.im));
  const double scale = std::max(spectral_norm(scaled), spectral_norm(c.im));
  v.inside = v.residual >= -tol.bound(scale);
  return v;
}

SectorMatrix SectorMatrix::certify(const Matrix& a, const TolerancePolicy& tol) {
  return SectorMatrix(a, sector_angle(a), tol);
}

SectorMatrix::SectorMatrix(Matrix a, double theta, const TolerancePolicy& tol) {
  if (!(theta >= 0.0 && theta < std::numbers::pi / 2)) {
    throw Error(ErrorKind::InvalidArgument, "SectorMatrix: theta must lie in [0, pi/2)");
  }
  const SectorVerdict v = in_sector(a, theta, tol);
  if (!v.inside) {
    std::ostringstream os;
    os << "SectorMatrix: matrix is not in S_theta for theta=" << theta << " (residual " << v.residual << ")";
    throw Error(ErrorKind::NotAccretive, os.str());
  }
  Cartesian c = cartesian(a);
  m_ = std::move(a);
  theta_ = theta;
  re_ = std::move(c.re);
  im_ = std::move(c.im);
}

std::vector<cdouble> numerical_range_samples(const Matrix& a, std::size_t k, std::uint64_t seed) {
  require_square(a, "numerical_range_samples");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "numerical_range_samples: k must be >= 1");
  const Index n = a.rows();
  const Cartesian c = cartesian(a);
  std::vector<ComplexVector> vecs;
  for (Index i = 0; i < n; ++i) vecs.push_back(ComplexVector::Unit(n, i));
  const HermitianEigen er = eig_hermitian(c.re);
  const HermitianEigen ei = eig_hermitian(c.im);
  for (Index i = 0; i < n; ++i) vecs.push_back(er.vectors.col(i));
  for (Index i = 0; i < n; ++i) vecs.push_back(ei.vectors.col(i));

  std::vector<cdouble> out;
  out.reserve(k);
  for (const auto& x : vecs) {
    if (out.size() == k) break;
    out.push_back(x.dot(a * x));  // dot() conjugates the left operand
  }
  Rng rng(seed);
  while (out.size() < k) {
    ComplexVector x = random_gaussian(n, 1, rng).col(0);
    x /= x.norm();
    out.push_back(x.dot(a * x));
  }
  return out;
}

const char* to_string(SignCondition s) noexcept {
  switch (s) {
    case SignCondition::None: return "none";
    case SignCondition::ImHadamardNonneg: return "nonneg";
    case SignCondition::ImHadamardNonpos: return "nonpos";
  }
  return "none";
}

SignCondition sign_condition_from_string(std::string_view s) {
  if (s == "none") return SignCondition::None;
  if (s == "nonneg" || s == "im_hadamard_nonneg") return SignCondition::ImHadamardNonneg;
  if (s == "nonpos" || s == "im_hadamard_nonpos") return SignCondition::ImHadamardNonpos;
  throw Error(ErrorKind::InvalidArgument, "unknown sign condition '" + std::string(s) + "'");
}

void GeneratorConfig::validate() const {
  if (dim < 1 || dim > 64) throw Error(ErrorKind::InvalidArgument, "generator: dim must lie in [1, 64]");
  if (!(theta >= 0.0 && theta < std::numbers::pi / 2)) {
    throw Error(ErrorKind::InvalidArgument, "generator: theta must lie in [0, pi/2)");
  }
  if (re_bounds) {
    const auto [m, M] = *re_bounds;
    if (!(m > 0.0) || !(M >= m) || !std::isfinite(M)) {
      throw Error(ErrorKind::InvalidArgument, "generator: need 0 < m <= M");
    }
  }
}

nlohmann::json GeneratorConfig::to_json() const {
  nlohmann::json j;
  j["dim"] = dim;
  j["theta"] = theta;
  j["sign"] = to_string(sign);
  j["m"] = re_bounds ? nlohmann::json(re_bounds->first) : nlohmann::json(nullptr);
  j["M"] = re_bounds ? nlohmann::json(re_bounds->second) : nlohmann::json(nullptr);
  j["seed"] = seed;
  return j;
}

GeneratorConfig GeneratorConfig::from_json(const nlohmann::json& j) {
  GeneratorConfig cfg;
  try {
    cfg.dim = j.at("dim").get<int>();
    cfg.theta = j.at("theta").get<double>();
    cfg.sign = sign_condition_from_string(j.value("sign", std::string("none")));
    if (j.contains("m") && !j.at("m").is_null()) {
      cfg.re_bounds = std::make_pair(j.at("m").get<double>(), j.at("M").get<double>());
    }
    cfg.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("generator config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

// ---------------------------------------------------------------------------
// random matrices

Matrix random_gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  const double s = 1.0 / std::sqrt(2.0);
  // Fill in a fixed order so outputs do not depend on Eigen's evaluation order.
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double x = normal(rng);
      const double y = normal(rng);
      g(i, j) = cdouble(x * s, y * s);
    }
  }
  return g;
}

Matrix random_unitary(Index n, Rng& rng) {
  const Matrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i) {
    const cdouble d = r(i, i);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(i) *= d / mag;
  }
  return q;
}

Hermitian random_hermitian(Index n, Rng& rng) { return Hermitian(random_gaussian(n, n, rng)); }

Hermitian random_pd(Index n, Rng& rng, double floor) {
  const Matrix g = random_gaussian(n, n, rng);
  return Hermitian(g.adjoint() * g + floor * Matrix::Identity(n, n));
}

namespace {

Hermitian rescale_spectrum(const Hermitian& r, double m, double M) {
  const HermitianEigen e = eig_hermitian(r);
  const double lo = e.values(0), hi = e.values(e.values.size() - 1);
  RealVector mapped(e.values.size());
  for (Index i = 0; i < mapped.size(); ++i) {
    if (hi - lo <= 1e-12 * std::max(1.0, hi)) {
      mapped(i) = 0.5 * (m + M);
    } else {
      mapped(i) = m + (e.values(i) - lo) / (hi - lo) * (M - m);
    }
    mapped(i) = std::clamp(mapped(i), m, M);
  }
  return Hermitian(e.vectors * mapped.asDiagonal() * e.vectors.adjoint());
}

}  // namespace

SectorMatrix random_sector(const GeneratorConfig& cfg, Rng& rng, ImSign im_sign) {
  cfg.validate();
  const Index n = cfg.dim;
  Hermitian re = random_pd(n, rng, 0.1);
  if (cfg.re_bounds) re = rescale_spectrum(re, cfg.re_bounds->first, cfg.re_bounds->second);

  Hermitian t;
  switch (im_sign) {
    case ImSign::Indefinite: t = random_hermitian(n, rng); break;
    case ImSign::Nonneg: {
      const Matrix g = random_gaussian(n, n, rng);
      t = Hermitian(g.adjoint() * g);
      break;
    }
    case ImSign::Nonpos: {
      const Matrix g = random_gaussian(n, n, rng);
      t = Hermitian(-(g.adjoint() * g));
      break;
    }
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rho = unit(rng);
  const double tnorm = spectral_norm(t);
  const double scale = tnorm > 0.0 ? rho * std::tan(cfg.theta) / tnorm : 0.0;

  const Hermitian re_half = hermitian_power(re, 0.5);
  const Hermitian im(re_half.matrix() * (t.matrix() * scale) * re_half.matrix());
  const Matrix a = re.matrix() + cdouble(0.0, 1.0) * im.matrix();
  return SectorMatrix::certify(a);
}

std::pair<SectorMatrix, SectorMatrix> random_sector_pair_signed(const GeneratorConfig& cfg, Rng& rng,
                                                                int budget) {
  if (cfg.sign == SignCondition::None) {
    throw Error(ErrorKind::InvalidArgument, "random_sector_pair_signed: sign condition required");
  }
  std::bernoulli_distribution coin(0.5);
  const TolerancePolicy tol;
  for (int attempt = 0; attempt < budget; ++attempt) {
    const bool flip = coin(rng);
    ImSign sa, sb;
    if (cfg.sign == SignCondition::ImHadamardNonpos) {
      sa = flip ? ImSign::Nonpos : ImSign::Nonneg;
      sb = flip ? ImSign::Nonneg : ImSign::Nonpos;
    } else {
      sa = sb = flip ? ImSign::Nonpos : ImSign::Nonneg;
    }
    SectorMatrix a = random_sector(cfg, rng, sa);
    SectorMatrix b = random_sector(cfg, rng, sb);
    const Hermitian h = hadamard(a.im(), b.im());
    const double slack = tol.bound(spectral_norm(h));
    const bool ok = cfg.sign == SignCondition::ImHadamardNonpos ? lambda_max(h) <= slack
                                                                 : lambda_min(h) >= -slack;
    if (ok) return {std::move(a), std::move(b)};
  }
  throw Error(ErrorKind::InvalidArgument, "random_sector_pair_signed: resample budget exhausted");
}

}  // namespace sectorlab
