#pragma once

// Sector membership, certified sector angles, numerical-range sampling and
// seeded generators for sector matrices with sign side-conditions.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sectorlab/linalg.hpp"

namespace sectorlab {

using Rng = std::mt19937_64;

/// arctan ||(Re A)^{-1/2} (Im A) (Re A)^{-1/2}||; throws NotAccretive.
double sector_angle(const Matrix& a);

struct SectorVerdict {
  bool inside = false;
  double residual = 0.0;  // min over lambda_min(tan(theta) Re A -/+ Im A)
};

SectorVerdict in_sector(const Matrix& a, double theta, const TolerancePolicy& tol = {});

/// A matrix with W(A) in S_theta, with its Cartesian parts cached.
class SectorMatrix {
 public:
  /// Certifies with theta = sector_angle(a).
  static SectorMatrix certify(const Matrix& a, const TolerancePolicy& tol = {});

  /// Throws NotAccretive when a is not in S_theta.
  SectorMatrix(Matrix a, double theta, const TolerancePolicy& tol = {});

  const Matrix& matrix() const noexcept { return m_; }
  double theta() const noexcept { return theta_; }
  const Hermitian& re() const noexcept { return re_; }
  const Hermitian& im() const noexcept { return im_; }
  Index dim() const noexcept { return m_.rows(); }

 private:
  SectorMatrix() = default;
  Matrix m_;
  double theta_ = 0.0;
  Hermitian re_;
  Hermitian im_;
};

/// k values x*Ax: standard basis vectors, eigenvectors of Re A and Im A,
/// then random unit vectors.
std::vector<cdouble> numerical_range_samples(const Matrix& a, std::size_t k, std::uint64_t seed);

enum class SignCondition { None, ImHadamardNonneg, ImHadamardNonpos };

const char* to_string(SignCondition s) noexcept;
SignCondition sign_condition_from_string(std::string_view s);

struct GeneratorConfig {
  int dim = 3;
  double theta = 0.5;
  SignCondition sign = SignCondition::None;
  std::optional<std::pair<double, double>> re_bounds;  // (m, M)
  std::uint64_t seed = 1;

  void validate() const;
  nlohmann::json to_json() const;
  static GeneratorConfig from_json(const nlohmann::json& j);
};

/// Sign of Im A requested from the constructive sampler.
enum class ImSign { Indefinite, Nonneg, Nonpos };

Matrix random_gaussian(Index rows, Index cols, Rng& rng);
Matrix random_unitary(Index n, Rng& rng);
Hermitian random_hermitian(Index n, Rng& rng);
/// G*G + floor*I.
Hermitian random_pd(Index n, Rng& rng, double floor = 0.1);

/// Re A = G*G + 0.1 I (optionally rescaled into [m, M]);
/// Im A = R^{1/2} (rho tan(theta) T / ||T||) R^{1/2}, rho ~ U[0,1].
SectorMatrix random_sector(const GeneratorConfig& cfg, Rng& rng, ImSign im_sign = ImSign::Indefinite);

/// Pair satisfying cfg.sign for Im A o Im B, verified by eigencheck and
/// resampled on failure. Throws InvalidArgument when the budget runs out.
std::pair<SectorMatrix, SectorMatrix> random_sector_pair_signed(const GeneratorConfig& cfg, Rng& rng,
                                                                int budget = 64);

}  // namespace sectorlab
