#pragma once

// Dense complex matrix substrate: Cartesian parts, Hadamard/Kronecker
// products, Loewner comparisons, eigen-decompositions and norms.

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sectorlab {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class ErrorKind {
  DimensionMismatch,
  NonFinite,
  NotAccretive,
  NotPositiveDefinite,
  IllConditioned,
  Convergence,
  Singular,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct TolerancePolicy {
  double abs_tol = 1e-9;
  double rel_tol = 1e-8;
  double eig_condition_cap = 1e8;

  void validate() const;
  /// Admissible negative slack for quantities of magnitude `scale`.
  double bound(double scale) const { return abs_tol + rel_tol * scale; }
};

/// Hermitian matrix. Construction symmetrizes, so entries[i][j] is exactly
/// conj(entries[j][i]) and the diagonal is exactly real.
class Hermitian {
 public:
  Hermitian() = default;
  explicit Hermitian(const Matrix& m);

  static Hermitian zero(Index n);
  static Hermitian identity(Index n);

  const Matrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

  Hermitian operator+(const Hermitian& o) const;
  Hermitian operator-(const Hermitian& o) const;
  Hermitian operator-() const;
  Hermitian operator*(double s) const;
  friend Hermitian operator*(double s, const Hermitian& h) { return h * s; }

 private:
  Matrix m_;
};

struct Cartesian {
  Hermitian re;
  Hermitian im;
};

void require_finite(const Matrix& a, const char* what);
void require_square(const Matrix& a, const char* what);

bool is_hermitian(const Matrix& a, double rel = 1e-13);

/// A = re + i*im with re = (A + A*)/2 and im = (A - A*)/(2i).
Cartesian cartesian(const Matrix& a);
Hermitian re_part(const Matrix& a);
Hermitian im_part(const Matrix& a);

Matrix hadamard(const Matrix& a, const Matrix& b);
Hermitian hadamard(const Hermitian& a, const Hermitian& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
Hermitian kronecker(const Hermitian& a, const Hermitian& b);

/// The n^2 x n isometry V with V e_j = e_j (x) e_j.
Matrix canonical_isometry(Index n);

struct HermitianEigen {
  RealVector values;  // ascending
  Matrix vectors;     // orthonormal columns
};

HermitianEigen eig_hermitian(const Hermitian& h);
double lambda_min(const Hermitian& h);
double lambda_max(const Hermitian& h);

struct GeneralEigen {
  ComplexVector values;
  Matrix vectors;
  Matrix inverse_vectors;
  double condition = 1.0;  // 2-norm condition number of `vectors`
};

/// A = P diag(values) P^-1. Throws IllConditioned when cond(P) exceeds the
/// policy cap.
GeneralEigen eig_general(const Matrix& a, const TolerancePolicy& tol = {});

struct LoewnerVerdict {
  bool holds = false;
  double residual = 0.0;   // lambda_min(rhs - lhs)
  double tolerance = 0.0;  // admissible negative slack
};

/// lhs <= rhs in the Loewner order, within the scale-aware tolerance.
LoewnerVerdict loewner_leq(const Hermitian& lhs, const Hermitian& rhs,
                           const TolerancePolicy& tol = {});

enum class NormKind { Spectral, Frobenius, Trace };

const char* to_string(NormKind kind) noexcept;
double norm(const Matrix& a, NormKind kind);
double frobenius_norm(const Matrix& a);
double spectral_norm(const Hermitian& h);

/// Inverse with a reciprocal-condition guard; throws Singular.
Matrix checked_inverse(const Matrix& a, double min_rcond = 1e-13);
Hermitian checked_inverse(const Hermitian& h, double min_rcond = 1e-13);

/// Spectral t-th power of a positive definite Hermitian matrix.
Hermitian hermitian_power(const Hermitian& h, double t);

}  // namespace sectorlab
