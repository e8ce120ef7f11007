#include "sectorlab/functions.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace sectorlab {

namespace {

constexpr double kGridTol = 1e-12;

std::string format_number(double x) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

double parse_number(std::string_view text, std::string_view context) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(context) + ": cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

// Principal branch z^t; exact std::pow on the positive axis.
cdouble principal_pow(cdouble z, double t) {
  if (z.imag() == 0.0 && z.real() > 0.0) return {std::pow(z.real(), t), 0.0};
  if (z == cdouble(0.0, 0.0)) return t > 0.0 ? cdouble(0.0, 0.0) : cdouble(INFINITY, 0.0);
  return std::exp(t * std::log(z));
}

bool near_ge(double lhs, double rhs) {
  return lhs >= rhs - kGridTol * std::max(1.0, std::abs(rhs));
}

bool off_branch_cut(cdouble z) {
  if (z == cdouble(0.0, 0.0)) return false;
  return !(z.imag() == 0.0 && z.real() < 0.0) && std::abs(std::arg(z)) < M_PI - 1e-12;
}

Matrix reconstruct(const GeneralEigen& e, const ComplexVector& mapped) {
  return e.vectors * mapped.asDiagonal() * e.inverse_vectors;
}

void require_accretive(const Matrix& a, const char* what) {
  require_square(a, what);
  require_finite(a, what);
  if (!(lambda_min(re_part(a)) > 0.0)) {
    throw Error(ErrorKind::NotAccretive, std::string(what) + ": Hermitian part is not positive definite");
  }
}

}  // namespace

std::span<const double> check_grid() {
  static const std::array<double, 20> grid = [] {
    std::array<double, 20> g{};
    for (std::size_t i = 0; i < g.size(); ++i) {
      g[i] = std::pow(10.0, -2.0 + 4.0 * static_cast<double>(i) / 19.0);
    }
    return g;
  }();
  return grid;
}

// ---------------------------------------------------------------------------
// scalar functions

ScalarFunction::ScalarFunction(std::string name, Evaluator eval, std::vector<double> parameters,
                               FunctionFlags flags)
    : name_(std::move(name)), eval_(std::move(eval)), parameters_(std::move(parameters)),
      flags_(flags) {
  if (flags_.normalized && std::abs((*this)(1.0) - 1.0) > kGridTol) {
    throw Error(ErrorKind::InvalidArgument, name_ + ": declared normalized but f(1) != 1");
  }
  if (flags_.supermultiplicative && !grid_supermultiplicative(*this)) {
    throw Error(ErrorKind::InvalidArgument,
                name_ + ": declared supermultiplicative but fails on the check grid");
  }
  if (flags_.operator_monotone && !grid_nondecreasing(*this)) {
    throw Error(ErrorKind::InvalidArgument, name_ + ": declared monotone but decreases on the grid");
  }
  if (flags_.operator_concave) {
    const auto g = check_grid();
    for (double x : g) {
      for (double y : g) {
        if (!near_ge((*this)(0.5 * (x + y)), 0.5 * ((*this)(x) + (*this)(y)))) {
          throw Error(ErrorKind::InvalidArgument,
                      name_ + ": declared concave but fails midpoint concavity on the grid");
        }
      }
    }
  }
}

bool grid_supermultiplicative(const ScalarFunction& f) {
  const auto g = check_grid();
  for (double x : g) {
    for (double y : g) {
      if (!near_ge(f(x * y), f(x) * f(y))) return false;
    }
  }
  return true;
}

bool grid_nondecreasing(const ScalarFunction& f) {
  const auto g = check_grid();
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (!near_ge(f(g[i]), f(g[i - 1]))) return false;
  }
  return true;
}

ScalarFunction power_function(double t) {
  if (!std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "power: exponent must be finite");
  FunctionFlags flags;
  flags.normalized = true;
  flags.supermultiplicative = true;  // x^t is exactly multiplicative
  flags.operator_monotone = t >= 0.0 && t <= 1.0;
  flags.operator_concave = t >= 0.0 && t <= 1.0;
  return ScalarFunction("power:" + format_number(t),
                        [t](cdouble z) { return principal_pow(z, t); }, {t}, flags);
}

ScalarFunction arithmetic_function() {
  FunctionFlags flags{true, true, false, true};
  return ScalarFunction("arithmetic", [](cdouble z) { return (1.0 + z) * 0.5; }, {}, flags);
}

ScalarFunction harmonic_function() {
  FunctionFlags flags{true, true, false, true};
  return ScalarFunction("harmonic", [](cdouble z) { return 2.0 * z / (1.0 + z); }, {}, flags);
}

ScalarFunction make_function(std::string_view id) {
  if (id == "identity") return power_function(1.0);
  if (id == "sqrt" || id == "geometric") return power_function(0.5);
  if (id == "arithmetic") return arithmetic_function();
  if (id == "harmonic") return harmonic_function();
  if (id.starts_with("power:")) return power_function(parse_number(id.substr(6), "function"));
  throw Error(ErrorKind::InvalidArgument, "unknown function id '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// means

Mean::Mean(std::string name, ScalarFunction representing, double weight)
    : name_(std::move(name)), f_(std::move(representing)), weight_(weight) {
  for (double x : check_grid()) {
    if (!(f_(x) > 0.0)) throw Error(ErrorKind::InvalidArgument, name_ + ": representing function not positive");
  }
  if (std::abs(f_(1.0) - 1.0) > kGridTol) {
    throw Error(ErrorKind::InvalidArgument, name_ + ": representing function not normalized");
  }
  if (!grid_nondecreasing(f_)) {
    throw Error(ErrorKind::InvalidArgument, name_ + ": representing function not nondecreasing");
  }
}

namespace {

double parse_weight(std::string_view text) {
  const double w = parse_number(text, "mean weight");
  if (w < 0.0 || w > 1.0) throw Error(ErrorKind::InvalidArgument, "mean weight must lie in [0,1]");
  return w;
}

Mean weighted_arithmetic(double w) {
  FunctionFlags flags{true, true, false, true};
  return Mean("weighted-arithmetic:" + format_number(w),
              ScalarFunction("weighted-arithmetic:" + format_number(w),
                             [w](cdouble z) { return (1.0 - w) + w * z; }, {w}, flags),
              w);
}

// A !_w B = ((1-w) A^-1 + w B^-1)^-1, so f(t) = t / ((1-w) t + w).
Mean weighted_harmonic(double w) {
  FunctionFlags flags{true, true, false, true};
  return Mean("weighted-harmonic:" + format_number(w),
              ScalarFunction("weighted-harmonic:" + format_number(w),
                             [w](cdouble z) { return z / ((1.0 - w) * z + w); }, {w}, flags),
              w);
}

Mean weighted_geometric(double w) {
  return Mean("weighted-geometric:" + format_number(w), power_function(w), w);
}

}  // namespace

Mean make_mean(std::string_view id) {
  if (id == "arithmetic") return Mean("arithmetic", arithmetic_function(), 0.5);
  if (id == "harmonic") return Mean("harmonic", harmonic_function(), 0.5);
  if (id == "geometric") return Mean("geometric", power_function(0.5), 0.5);
  if (id.starts_with("weighted-arithmetic:")) return weighted_arithmetic(parse_weight(id.substr(20)));
  if (id.starts_with("weighted-harmonic:")) return weighted_harmonic(parse_weight(id.substr(18)));
  if (id.starts_with("weighted-geometric:")) return weighted_geometric(parse_weight(id.substr(19)));
  throw Error(ErrorKind::InvalidArgument, "unknown mean id '" + std::string(id) + "'");
}

Mean adjoint_mean(const Mean& m) {
  const std::string& n = m.name();
  if (n == "arithmetic") return make_mean("harmonic");
  if (n == "harmonic") return make_mean("arithmetic");
  if (n == "geometric") return make_mean("geometric");
  const double w = m.weight();
  if (n.starts_with("weighted-arithmetic:")) return weighted_harmonic(1.0 - w);
  if (n.starts_with("weighted-harmonic:")) return weighted_arithmetic(1.0 - w);
  if (n.starts_with("weighted-geometric:")) return weighted_geometric(1.0 - w);

  std::string inner = n;
  if (inner.starts_with("adjoint(") && inner.ends_with(")")) {
    // adjoint of an adjoint is the original function t / (t / f(t)) = f(t)
    inner = inner.substr(8, inner.size() - 9);
  }
  const ScalarFunction f = m.representing();
  FunctionFlags flags{true, false, false, true};
  const std::string name = (inner != n) ? inner : "adjoint(" + n + ")";
  return Mean(name, ScalarFunction(name, [f](cdouble z) { return z / f(z); }, {}, flags), w);
}

bool same_mean(const Mean& a, const Mean& b) {
  for (double x : check_grid()) {
    const double fa = a.representing()(x), fb = b.representing()(x);
    if (std::abs(fa - fb) > kGridTol * std::max(1.0, std::abs(fa))) return false;
  }
  return true;
}

bool mean_between(const Mean& candidate, const Mean& m) {
  const Mean adj = adjoint_mean(m);
  for (double x : check_grid()) {
    const double f = m.representing()(x), fs = adj.representing()(x);
    const double c = candidate.representing()(x);
    const double lo = std::min(f, fs), hi = std::max(f, fs);
    if (!near_ge(c, lo) || !near_ge(hi, c)) return false;
  }
  return true;
}

double kantorovich(double m, double M) {
  if (!(m > 0.0) || !(M >= m) || !std::isfinite(M)) {
    throw Error(ErrorKind::InvalidArgument, "kantorovich: need 0 < m <= M");
  }
  return (M + m) * (M + m) / (4.0 * m * M);
}

// ---------------------------------------------------------------------------
// matrix functions

Matrix principal_power(const Matrix& a, double t, const TolerancePolicy& tol) {
  if (!(t >= -1.0 && t <= 2.0)) {
    throw Error(ErrorKind::InvalidArgument, "principal_power: exponent must lie in [-1, 2]");
  }
  require_accretive(a, "principal_power");
  if (t == 0.0) return Matrix::Identity(a.rows(), a.cols());
  if (t == 1.0) return a;
  if (is_hermitian(a)) return hermitian_power(Hermitian(a), t).matrix();

  const GeneralEigen e = eig_general(a, tol);
  const ComplexVector mapped = e.values.unaryExpr([t](cdouble z) { return principal_pow(z, t); });
  return reconstruct(e, mapped);
}

Hermitian apply_hermitian_function(const Hermitian& h, const ScalarFunction& f) {
  const HermitianEigen e = eig_hermitian(h);
  if (!(e.values(0) > 0.0)) {
    throw Error(ErrorKind::NotPositiveDefinite, "apply_hermitian_function: matrix is not positive definite");
  }
  RealVector mapped = e.values.unaryExpr([&f](double x) { return f(x); });
  return Hermitian(e.vectors * mapped.asDiagonal() * e.vectors.adjoint());
}

Matrix apply_function(const Matrix& a, const ScalarFunction& f, const TolerancePolicy& tol) {
  require_square(a, "apply_function");
  require_finite(a, "apply_function");
  if (is_hermitian(a)) return apply_hermitian_function(Hermitian(a), f).matrix();

  const GeneralEigen e = eig_general(a, tol);
  for (Index i = 0; i < e.values.size(); ++i) {
    if (!off_branch_cut(e.values(i))) {
      throw Error(ErrorKind::NotAccretive, "apply_function: spectrum meets the branch cut (-inf, 0]");
    }
  }
  const ComplexVector mapped = e.values.unaryExpr([&f](cdouble z) { return f(z); });
  return reconstruct(e, mapped);
}

Matrix operator_mean(const Matrix& a, const Matrix& b, const Mean& m, const TolerancePolicy& tol) {
  require_accretive(a, "operator_mean");
  require_accretive(b, "operator_mean");
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "operator_mean: dimensions differ");
  const Matrix half = principal_power(a, 0.5, tol);
  const Matrix inv_half = principal_power(a, -0.5, tol);
  const Matrix inner = inv_half * b * inv_half;
  return half * apply_function(inner, m.representing(), tol) * half;
}

}  // namespace sectorlab
