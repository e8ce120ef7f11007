#include "sectorlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sectorlab/kernels.hpp"

namespace sectorlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NonFinite: return "non-finite";
    case ErrorKind::NotAccretive: return "not-accretive";
    case ErrorKind::NotPositiveDefinite: return "not-positive-definite";
    case ErrorKind::IllConditioned: return "ill-conditioned";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

void TolerancePolicy::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(eig_condition_cap > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerance policy entries must be strictly positive");
  }
}

// ---------------------------------------------------------------------------
// Hermitian

Hermitian::Hermitian(const Matrix& m) {
  require_square(m, "Hermitian");
  m_ = (m + m.adjoint()) * 0.5;
}

Hermitian Hermitian::zero(Index n) { return Hermitian(Matrix::Zero(n, n)); }

Hermitian Hermitian::identity(Index n) { return Hermitian(Matrix::Identity(n, n)); }

Hermitian Hermitian::operator+(const Hermitian& o) const { return Hermitian(m_ + o.m_); }
Hermitian Hermitian::operator-(const Hermitian& o) const { return Hermitian(m_ - o.m_); }
Hermitian Hermitian::operator-() const { return Hermitian(-m_); }
Hermitian Hermitian::operator*(double s) const { return Hermitian(m_ * s); }

// ---------------------------------------------------------------------------
// validation

void require_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) {
    throw Error(ErrorKind::NonFinite, std::string(what) + ": non-finite entry");
  }
}

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << a.rows() << "x" << a.cols();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
}

bool is_hermitian(const Matrix& a, double rel) {
  if (a.rows() != a.cols()) return false;
  const double scale = frobenius_norm(a);
  return frobenius_norm(a - a.adjoint()) <= rel * (1.0 + scale);
}

// ---------------------------------------------------------------------------
// Cartesian decomposition

Cartesian cartesian(const Matrix& a) { return {re_part(a), im_part(a)}; }

Hermitian re_part(const Matrix& a) {
  require_square(a, "re_part");
  return Hermitian(a);
}

Hermitian im_part(const Matrix& a) {
  require_square(a, "im_part");
  // (A - A*)/(2i) = -i (A - A*)/2
  return Hermitian((a - a.adjoint()) * cdouble(0.0, -0.5));
}

// ---------------------------------------------------------------------------
// products

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << "hadamard: shapes " << a.rows() << "x" << a.cols() << " and " << b.rows() << "x"
       << b.cols() << " differ";
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  Matrix out(a.rows(), a.cols());
  kernels::active().cmul(a.data(), b.data(), out.data(), static_cast<std::size_t>(a.size()));
  return out;
}

Hermitian hadamard(const Hermitian& a, const Hermitian& b) {
  return Hermitian(hadamard(a.matrix(), b.matrix()));
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  const Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  const auto& k = kernels::active();
  // Column-major: column (j*cb + l) holds a(i, j) * b(:, l) in row block i.
  for (Index j = 0; j < ca; ++j) {
    for (Index l = 0; l < cb; ++l) {
      cdouble* dst = out.data() + (j * cb + l) * out.rows();
      const cdouble* src = b.data() + l * rb;
      for (Index i = 0; i < ra; ++i) {
        k.cscale(a(i, j), src, dst + i * rb, static_cast<std::size_t>(rb));
      }
    }
  }
  return out;
}

Hermitian kronecker(const Hermitian& a, const Hermitian& b) {
  return Hermitian(kronecker(a.matrix(), b.matrix()));
}

Matrix canonical_isometry(Index n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "canonical_isometry: n must be >= 1");
  Matrix v = Matrix::Zero(n * n, n);
  for (Index j = 0; j < n; ++j) v(j * n + j, j) = 1.0;
  return v;
}

// ---------------------------------------------------------------------------
// eigen-decompositions

HermitianEigen eig_hermitian(const Hermitian& h) {
  require_finite(h.matrix(), "eig_hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Convergence, "eig_hermitian: solver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double lambda_min(const Hermitian& h) {
  require_finite(h.matrix(), "lambda_min");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Convergence, "lambda_min: solver did not converge");
  }
  return solver.eigenvalues()(0);
}

double lambda_max(const Hermitian& h) {
  require_finite(h.matrix(), "lambda_max");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Convergence, "lambda_max: solver did not converge");
  }
  return solver.eigenvalues()(h.dim() - 1);
}

GeneralEigen eig_general(const Matrix& a, const TolerancePolicy& tol) {
  require_square(a, "eig_general");
  require_finite(a, "eig_general");
  Eigen::ComplexEigenSolver<Matrix> solver(a, true);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Convergence, "eig_general: solver did not converge");
  }
  GeneralEigen out;
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();

  Eigen::JacobiSVD<Matrix> svd(out.vectors);
  const RealVector& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  out.condition = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
  if (!(out.condition <= tol.eig_condition_cap)) {
    std::ostringstream os;
    os << "eig_general: eigenvector condition " << out.condition << " exceeds cap "
       << tol.eig_condition_cap;
    throw Error(ErrorKind::IllConditioned, os.str());
  }
  out.inverse_vectors = out.vectors.fullPivLu().inverse();
  return out;
}

// ---------------------------------------------------------------------------
// order and norms

LoewnerVerdict loewner_leq(const Hermitian& lhs, const Hermitian& rhs, const TolerancePolicy& tol) {
  if (lhs.dim() != rhs.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "loewner_leq: dimensions differ");
  }
  require_finite(lhs.matrix(), "loewner_leq lhs");
  require_finite(rhs.matrix(), "loewner_leq rhs");
  LoewnerVerdict v;
  v.residual = lambda_min(rhs - lhs);
  v.tolerance = tol.bound(std::max(spectral_norm(lhs), spectral_norm(rhs)));
  v.holds = v.residual >= -v.tolerance;
  return v;
}

const char* to_string(NormKind kind) noexcept {
  switch (kind) {
    case NormKind::Spectral: return "spectral";
    case NormKind::Frobenius: return "frobenius";
    case NormKind::Trace: return "trace";
  }
  return "unknown";
}

double frobenius_norm(const Matrix& a) {
  return std::sqrt(kernels::active().sumsq(a.data(), static_cast<std::size_t>(a.size())));
}

double spectral_norm(const Hermitian& h) {
  if (h.dim() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  const RealVector& ev = solver.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double norm(const Matrix& a, NormKind kind) {
  if (kind == NormKind::Frobenius) return frobenius_norm(a);
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const RealVector& sv = svd.singularValues();
  return kind == NormKind::Spectral ? sv(0) : sv.sum();
}

Matrix checked_inverse(const Matrix& a, double min_rcond) {
  require_square(a, "checked_inverse");
  require_finite(a, "checked_inverse");
  Eigen::PartialPivLU<Matrix> lu(a);
  // The estimator returns 1 on an exactly zero pivot, so check pivots too.
  const double rc = lu.rcond();
  const double piv = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  Matrix inv;
  if (rc > min_rcond && piv > 0.0) inv = lu.inverse();
  if (!(rc > min_rcond) || !(piv > 0.0) || !inv.allFinite()) {
    std::ostringstream os;
    os << "checked_inverse: reciprocal condition " << rc << " below " << min_rcond;
    throw Error(ErrorKind::Singular, os.str());
  }
  return inv;
}

Hermitian checked_inverse(const Hermitian& h, double min_rcond) {
  return Hermitian(checked_inverse(h.matrix(), min_rcond));
}

Hermitian hermitian_power(const Hermitian& h, double t) {
  if (t == 0.0) return Hermitian::identity(h.dim());
  if (t == 1.0) return h;
  const HermitianEigen e = eig_hermitian(h);
  if (!(e.values(0) > 0.0)) {
    throw Error(ErrorKind::NotPositiveDefinite, "hermitian_power: matrix is not positive definite");
  }
  RealVector powered = e.values.unaryExpr([t](double x) { return std::pow(x, t); });
  return Hermitian(e.vectors * powered.asDiagonal() * e.vectors.adjoint());
}

}  // namespace sectorlab
