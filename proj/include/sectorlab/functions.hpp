#pragma once

// Principal matrix functions of accretive matrices, the scalar function
// catalog (operator monotone / concave / supermultiplicative entries) and
// operator means given by their representing functions.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sectorlab/linalg.hpp"

namespace sectorlab {

struct FunctionFlags {
  bool operator_monotone = false;
  bool operator_concave = false;
  bool supermultiplicative = false;
  bool normalized = false;
};

/// Fixed deterministic check grid: 20 log-spaced points over [1e-2, 1e2].
std::span<const double> check_grid();

/// A scalar function on (0, inf) together with its analytic continuation
/// to the slit plane, used for principal matrix calculus.
class ScalarFunction {
 public:
  using Evaluator = std::function<cdouble(cdouble)>;

  /// Validates the declared flags on the check grid; throws InvalidArgument.
  ScalarFunction(std::string name, Evaluator eval, std::vector<double> parameters,
                 FunctionFlags flags);

  const std::string& name() const noexcept { return name_; }
  const FunctionFlags& flags() const noexcept { return flags_; }
  std::span<const double> parameters() const noexcept { return parameters_; }

  double operator()(double x) const { return eval_(cdouble(x, 0.0)).real(); }
  cdouble operator()(cdouble z) const { return eval_(z); }

  /// In class m: operator monotone with f(1) = 1.
  bool in_class_m() const noexcept { return flags_.operator_monotone && flags_.normalized; }

 private:
  std::string name_;
  Evaluator eval_;
  std::vector<double> parameters_;
  FunctionFlags flags_;
};

bool grid_supermultiplicative(const ScalarFunction& f);
bool grid_nondecreasing(const ScalarFunction& f);

/// x^t on the principal branch. t in [0,1] carries the full flag set.
ScalarFunction power_function(double t);
ScalarFunction arithmetic_function();  // (1 + x)/2
ScalarFunction harmonic_function();    // 2x/(1 + x)

/// Catalog lookup: "power:<t>", "identity", "sqrt", "arithmetic",
/// "harmonic", "geometric".
ScalarFunction make_function(std::string_view id);

class Mean {
 public:
  /// Validates positivity, normalization and monotonicity on the grid.
  Mean(std::string name, ScalarFunction representing, double weight);

  const std::string& name() const noexcept { return name_; }
  const ScalarFunction& representing() const noexcept { return f_; }
  double weight() const noexcept { return weight_; }

 private:
  std::string name_;
  ScalarFunction f_;
  double weight_;
};

/// "arithmetic", "harmonic", "geometric", "weighted-arithmetic:<w>",
/// "weighted-harmonic:<w>", "weighted-geometric:<w>".
Mean make_mean(std::string_view id);

/// Representing function t / f(t). Catalog entries map onto catalog names.
Mean adjoint_mean(const Mean& m);

/// Representing functions agree on the check grid.
bool same_mean(const Mean& a, const Mean& b);

/// min(f, f*) <= f_candidate <= max(f, f*) pointwise on the check grid.
bool mean_between(const Mean& candidate, const Mean& m);

/// (M + m)^2 / (4 m M).
double kantorovich(double m, double M);

/// Principal power A^t for accretive A and t in [-1, 2].
Matrix principal_power(const Matrix& a, double t, const TolerancePolicy& tol = {});

/// f(A) by principal calculus. The spectrum must avoid (-inf, 0].
Matrix apply_function(const Matrix& a, const ScalarFunction& f, const TolerancePolicy& tol = {});

/// Spectral calculus on a positive definite Hermitian matrix.
Hermitian apply_hermitian_function(const Hermitian& h, const ScalarFunction& f);

/// A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2} with principal powers.
Matrix operator_mean(const Matrix& a, const Matrix& b, const Mean& m,
                     const TolerancePolicy& tol = {});

}  // namespace sectorlab
