#pragma once

// One predicate per inequality. Each predicate verifies its hypotheses on
// the given inputs, evaluates both sides and reports signed residuals:
// lambda_min(RHS - LHS) for Loewner claims, bound - value for norm claims.

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sectorlab/functions.hpp"
#include "sectorlab/linalg.hpp"
#include "sectorlab/maps.hpp"
#include "sectorlab/sector.hpp"

namespace sectorlab {

namespace filter {
inline constexpr const char* kSignMiss = "sign-condition-miss";
inline constexpr const char* kNotInSector = "not-in-sector";
inline constexpr const char* kIllConditioned = "ill-conditioned";
inline constexpr const char* kSingularProduct = "singular-product";
inline constexpr const char* kNotAccretive = "not-accretive";
inline constexpr const char* kNotPositiveDefinite = "not-positive-definite";
inline constexpr const char* kBoundsMiss = "bounds-miss";
inline constexpr const char* kMeanNotBetween = "mean-not-between";
inline constexpr const char* kMapNotMultiplicative = "map-not-hadamard-multiplicative";
inline constexpr const char* kMapNotUnital = "map-not-unital";
inline constexpr const char* kFunctionFlags = "function-flags";
inline constexpr const char* kNotIsometry = "not-isometry";
inline constexpr const char* kInvalidInput = "invalid-input";
inline constexpr const char* kNumerical = "numerical-failure";
}  // namespace filter

struct Link {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool holds() const { return residual >= -tolerance; }
};

struct CheckOutcome {
  std::string theorem_id;
  bool hypotheses_ok = false;
  std::string filter_reason;  // set when hypotheses fail
  double residual = 0.0;      // worst link, relative to its tolerance
  double tolerance = 0.0;
  bool pass = false;          // hypotheses_ok && every link holds
  std::vector<Link> links;
  nlohmann::json witness;
  std::vector<std::string> notes;

  const Link* link(std::string_view name) const;
  nlohmann::json to_json() const;
};

enum class SignVerdict { Zero, Nonneg, Nonpos, Indefinite };
SignVerdict hermitian_sign(const Hermitian& h, const TolerancePolicy& tol = {});

/// Common sector: the largest certified angle among the inputs.
double common_theta(std::initializer_list<const SectorMatrix*> ms);

// --- powers of sector matrices --------------------------------------------

/// t in [0,1]: cos^{2t}(theta) Re(A^t) <= (Re A)^t <= Re(A^t).
/// t in [-1,0]: Re(A^t) <= (Re A)^t <= cos^{2t}(theta) Re(A^t).
CheckOutcome check_power_bounds(const SectorMatrix& a, double t, const TolerancePolicy& tol = {});

// --- Hadamard product of accretive matrices ---------------------------------

CheckOutcome check_le17(const SectorMatrix& a, const SectorMatrix& b, const TolerancePolicy& tol = {});
/// Negative control: Re(A o B) <= Re A o Re B asserted without the sign hypothesis.
CheckOutcome check_le17_unsigned(const SectorMatrix& a, const SectorMatrix& b,
                                 const TolerancePolicy& tol = {});

// --- sums of powers ---------------------------------------------------------

CheckOutcome check_chan301(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                           double alpha, double beta, double r, const TolerancePolicy& tol = {});
CheckOutcome check_t0_303(const SectorMatrix& a, const SectorMatrix& b, const SectorMatrix& c,
                          const SectorMatrix& d, double alpha, double beta, double r,
                          const TolerancePolicy& tol = {});

/// RHS - LHS of the Kronecker reverse inequality.
Hermitian p1_321_difference(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                            double alpha, double beta, double r);
/// The same difference evaluated through r -> 1 - r, A <-> C, B <-> D,
/// i.e. with the Kronecker factors in swapped order.
Hermitian p1_321_difference_swapped(const Hermitian& a, const Hermitian& b, const Hermitian& c,
                                    const Hermitian& d, double alpha, double beta, double r);
CheckOutcome check_p1_321(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                          double alpha, double beta, double r, const TolerancePolicy& tol = {});

Hermitian t1_308_difference(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                            double alpha, double beta, double r);
CheckOutcome check_t1_308(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                          double alpha, double beta, double r, const TolerancePolicy& tol = {});

CheckOutcome check_305(const SectorMatrix& a, const SectorMatrix& b, const SectorMatrix& c,
                       const SectorMatrix& d, double alpha, double beta, double r,
                       const TolerancePolicy& tol = {});

enum class ConvexityKind { BAinvB, KronPower };

/// Midpoint convexity of F(X, Y) = Y* X^-1 Y or F(X, Y) = X^r (x) Y^{1-r}.
CheckOutcome check_joint_convexity(ConvexityKind kind, double r, const Hermitian& x1, const Hermitian& y1,
                                   const Hermitian& x2, const Hermitian& y2, const TolerancePolicy& tol = {});

// --- positive maps and operator monotone functions --------------------------

struct RemarkMatrices {
  Matrix a;
  Matrix b;
};
RemarkMatrices remark_matrices();

/// Fixed 2x2 pair: asserts Re(A o B) != Re A o Re B.
CheckOutcome check_remark(const TolerancePolicy& tol = {});

CheckOutcome check_62(const PositiveMap& phi, const SectorMatrix& a, const SectorMatrix& b,
                      const TolerancePolicy& tol = {});
CheckOutcome check_24(const ScalarFunction& f, const SectorMatrix& a, const TolerancePolicy& tol = {});
CheckOutcome check_39(const ScalarFunction& f, const PositiveMap& phi, const Hermitian& a, const Hermitian& b,
                      const TolerancePolicy& tol = {});
CheckOutcome check_t4(const ScalarFunction& f, const PositiveMap& phi, const SectorMatrix& a,
                      const SectorMatrix& b, const TolerancePolicy& tol = {});

struct MeanTriple {
  Mean sigma;
  Mean sigma1;
  Mean sigma2;
};

CheckOutcome check_m1(const PositiveMap& phi, const SectorMatrix& a, const SectorMatrix& b, double m,
                      double M, const MeanTriple& means, const TolerancePolicy& tol = {});
CheckOutcome check_25(const Hermitian& a, const Hermitian& b, double t, std::span<const NormKind> kinds,
                      const TolerancePolicy& tol = {});
CheckOutcome check_K(const PositiveMap& phi, const SectorMatrix& a, const SectorMatrix& b, double m,
                     double M, const MeanTriple& means, const TolerancePolicy& tol = {});

// --- inverses ---------------------------------------------------------------

CheckOutcome check_41(const Hermitian& a, const Hermitian& b, const TolerancePolicy& tol = {});
CheckOutcome check_41_0(const Hermitian& a, const Matrix& x, const TolerancePolicy& tol = {});
CheckOutcome check_t2(const SectorMatrix& a, const SectorMatrix& b, const TolerancePolicy& tol = {});

enum class T3Variant { One = 1, Two = 2 };
CheckOutcome check_t3(const SectorMatrix& a, const SectorMatrix& b, T3Variant variant,
                      const TolerancePolicy& tol = {});

}  // namespace sectorlab
