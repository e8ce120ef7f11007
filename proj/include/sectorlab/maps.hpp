#pragma once

// Closed catalog of unital positive linear maps. Positivity and unitality
// are spot-checked at construction; the Hadamard-multiplicative flag is set
// only for identity, permutation congruence, principal submatrices and
// compositions of those.

#include <string>
#include <string_view>
#include <vector>

#include "sectorlab/linalg.hpp"

namespace sectorlab {

enum class MapKind {
  Identity,
  UnitaryCongruence,
  PermutationCongruence,
  IsometryCompression,
  PrincipalSubmatrix,
  Pinching,
  TraceNormalized,
  SchurMultiplier,
  Composition,
};

struct MapFlags {
  bool unital = false;
  bool hadamard_multiplicative = false;
};

class PositiveMap {
 public:
  static PositiveMap identity(Index n);
  /// X -> U* X U.
  static PositiveMap unitary_congruence(const Matrix& u);
  /// (P X P^T)_{ij} = X_{perm[i], perm[j]}.
  static PositiveMap permutation_congruence(std::vector<Index> perm);
  /// X -> V* X V for an n x m isometry V.
  static PositiveMap isometry_compression(const Matrix& v);
  /// X -> X[S, S].
  static PositiveMap principal_submatrix(Index n, std::vector<Index> indices);
  /// Zeroes the off-diagonal blocks of the given partition.
  static PositiveMap pinching(std::vector<Index> block_sizes);
  /// X -> (tr X / n) I.
  static PositiveMap trace_normalized(Index n);
  /// X -> C o X for a correlation matrix C (PSD, unit diagonal).
  static PositiveMap schur_multiplier(const Matrix& c);
  /// second(first(X)).
  static PositiveMap compose(const PositiveMap& first, const PositiveMap& second);

  Matrix apply(const Matrix& x) const;

  MapKind kind() const noexcept { return kind_; }
  Index input_dim() const noexcept { return in_; }
  Index output_dim() const noexcept { return out_; }
  const MapFlags& flags() const noexcept { return flags_; }
  const std::string& id() const noexcept { return id_; }

 private:
  friend PositiveMap parse_map(std::string_view id, Index n);
  PositiveMap() = default;
  void finalize(bool hadamard_multiplicative);

  MapKind kind_ = MapKind::Identity;
  Index in_ = 0;
  Index out_ = 0;
  MapFlags flags_;
  std::string id_;
  Matrix operand_;
  std::vector<Index> indices_;
  std::vector<PositiveMap> parts_;
};

inline Matrix apply_map(const PositiveMap& phi, const Matrix& x) { return phi.apply(x); }

/// Map ids: "identity", "perm:2,0,1", "submatrix:0,1", "trace", "pinch:2+2",
/// "unitary:<seed>", "compress:<m>:<seed>", "schur:<seed>", "cyclic" (the
/// cyclic permutation of the input dimension); "a|b" composes a then b.
/// `n` is the input dimension.
PositiveMap parse_map(std::string_view id, Index n);

/// Cyclic permutation id for dimension n, e.g. "perm:1,2,0".
std::string default_permutation_id(Index n);

struct MapCheck {
  double residual = 0.0;   // Frobenius norm of the defect
  double tolerance = 0.0;
  bool ok = false;
};

/// ||Phi(Re A) - Re(Phi(A))||_F.
MapCheck check_re_commutes(const PositiveMap& phi, const Matrix& a, const TolerancePolicy& tol = {});

/// ||Phi(A o B) - Phi(A) o Phi(B)||_F.
MapCheck check_hadamard_multiplicative(const PositiveMap& phi, const Matrix& a, const Matrix& b,
                                       const TolerancePolicy& tol = {});

}  // namespace sectorlab
