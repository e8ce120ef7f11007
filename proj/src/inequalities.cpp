#include "sectorlab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace sectorlab {

namespace {

CheckOutcome start(const char* id) {
  CheckOutcome o;
  o.theorem_id = id;
  return o;
}

CheckOutcome reject(CheckOutcome o, const char* reason, std::string note = {}) {
  o.hypotheses_ok = false;
  o.filter_reason = reason;
  o.pass = false;
  if (!note.empty()) o.notes.push_back(std::move(note));
  return o;
}

void add_order(CheckOutcome& o, std::string name, const Hermitian& lhs, const Hermitian& rhs,
               const TolerancePolicy& tol) {
  const LoewnerVerdict v = loewner_leq(lhs, rhs, tol);
  o.links.push_back({std::move(name), v.residual, v.tolerance});
}

void add_bound(CheckOutcome& o, std::string name, double value, double bound, const TolerancePolicy& tol) {
  o.links.push_back({std::move(name), bound - value, tol.bound(std::max(std::abs(value), std::abs(bound)))});
}

CheckOutcome finish(CheckOutcome o) {
  o.hypotheses_ok = true;
  o.filter_reason.clear();
  o.pass = true;
  const Link* worst = nullptr;
  double worst_ratio = INFINITY;
  for (const Link& l : o.links) {
    const double ratio = l.residual / l.tolerance;
    if (worst == nullptr || ratio < worst_ratio) {
      worst = &l;
      worst_ratio = ratio;
    }
    o.pass = o.pass && l.holds();
  }
  if (worst != nullptr) {
    o.residual = worst->residual;
    o.tolerance = worst->tolerance;
  }
  return o;
}

bool sign_ok_nonneg(SignVerdict s) { return s == SignVerdict::Nonneg || s == SignVerdict::Zero; }
bool sign_ok_nonpos(SignVerdict s) { return s == SignVerdict::Nonpos || s == SignVerdict::Zero; }

void require_pd(const Hermitian& h, const char* what) {
  if (!(lambda_min(h) > 0.0)) {
    throw Error(ErrorKind::NotPositiveDefinite, std::string(what) + ": input is not positive definite");
  }
}

void require_positive_weights(double alpha, double beta, const char* what) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + ": alpha and beta must be positive");
  }
}

bool in_reverse_range(double r) { return (r > -1.0 && r < 0.0) || (r > 1.0 && r < 2.0); }

void require_reverse_range(double r, const char* what) {
  if (!in_reverse_range(r)) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + ": r must lie in (-1,0) u (1,2)");
  }
}

double sec2(double theta) {
  const double c = std::cos(theta);
  return 1.0 / (c * c);
}

std::string format(const char* label, double v) {
  std::ostringstream os;
  os.precision(12);
  os << label << v;
  return os.str();
}

}  // namespace

const Link* CheckOutcome::link(std::string_view name) const {
  for (const Link& l : links)
    if (l.name == name) return &l;
  return nullptr;
}

nlohmann::json CheckOutcome::to_json() const {
  nlohmann::json j;
  j["theorem_id"] = theorem_id;
  j["hypotheses_ok"] = hypotheses_ok;
  j["filter_reason"] = filter_reason;
  j["residual"] = residual;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  nlohmann::json links_json = nlohmann::json::array();
  for (const Link& l : links) {
    links_json.push_back({{"name", l.name}, {"residual", l.residual}, {"tolerance", l.tolerance}});
  }
  j["links"] = std::move(links_json);
  j["witness"] = witness;
  j["notes"] = notes;
  return j;
}

SignVerdict hermitian_sign(const Hermitian& h, const TolerancePolicy& tol) {
  const HermitianEigen e = eig_hermitian(h);
  const double lo = e.values(0), hi = e.values(e.values.size() - 1);
  const double slack = tol.bound(std::max(std::abs(lo), std::abs(hi)));
  const bool nonneg = lo >= -slack, nonpos = hi <= slack;
  if (nonneg && nonpos) return SignVerdict::Zero;
  if (nonneg) return SignVerdict::Nonneg;
  if (nonpos) return SignVerdict::Nonpos;
  return SignVerdict::Indefinite;
}

double common_theta(std::initializer_list<const SectorMatrix*> ms) {
  double theta = 0.0;
  for (const SectorMatrix* m : ms) theta = std::max(theta, m->theta());
  return theta;
}

// ---------------------------------------------------------------------------

CheckOutcome check_power_bounds(const SectorMatrix& a, double t, const TolerancePolicy& tol) {
  if (!(t >= -1.0 && t <= 1.0)) throw Error(ErrorKind::InvalidArgument, "power_bounds: t must lie in [-1,1]");
  CheckOutcome o = start("power_bounds");
  const double c2t = std::pow(std::cos(a.theta()), 2.0 * t);
  const Hermitian re_pow = re_part(principal_power(a.matrix(), t, tol));
  const Hermitian pow_re = hermitian_power(a.re(), t);
  if (t >= 0.0) {
    add_order(o, "lower", re_pow * c2t, pow_re, tol);
    add_order(o, "upper", pow_re, re_pow, tol);
  } else {
    add_order(o, "lower", re_pow, pow_re, tol);
    add_order(o, "upper", pow_re, re_pow * c2t, tol);
  }
  return finish(std::move(o));
}

CheckOutcome check_le17(const SectorMatrix& a, const SectorMatrix& b, const TolerancePolicy& tol) {
  CheckOutcome o = start("le17");
  const Hermitian im_prod = hadamard(a.im(), b.im());
  const SignVerdict sign = hermitian_sign(im_prod, tol);
  if (sign == SignVerdict::Indefinite) return reject(o, filter::kSignMiss);

  const Hermitian re_of_prod = re_part(hadamard(a.matrix(), b.matrix()));
  const Hermitian prod_of_re = hadamard(a.re(), b.re());
  if (sign_ok_nonneg(sign)) add_order(o, "0-17", re_of_prod, prod_of_re, tol);
  if (sign_ok_nonpos(sign)) add_order(o, "1-17", prod_of_re, re_of_prod, tol);
  const double identity_defect = frobenius_norm((prod_of_re - re_of_prod - im_prod).matrix());
  o.notes.push_back(format("cartesian identity defect ", identity_defect));
  return finish(std::move(o));
}

CheckOutcome check_le17_unsigned(const SectorMatrix& a, const SectorMatrix& b, const TolerancePolicy& tol) {
  CheckOutcome o = start("neg_le17");
  add_order(o, "unsigned", re_part(hadamard(a.matrix(), b.matrix())), hadamard(a.re(), b.re()), tol);
  return finish(std::move(o));
}

// ---------------------------------------------------------------------------

CheckOutcome check_chan301(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                           double alpha, double beta, double r, const TolerancePolicy& tol) {
  require_positive_weights(alpha, beta, "chan301");
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidArgument, "chan301: r must lie in (0,1)");
  for (const Hermitian* h : {&a, &b, &c, &d}) require_pd(*h, "chan301");
  CheckOutcome o = start("chan301");
  const double s = 1.0 - r;
  const Hermitian lhs = hadamard(hermitian_power(alpha * a + beta * b, r), hermitian_power(alpha * c + beta * d, s));
  const Hermitian rhs = alpha * hadamard(hermitian_power(a, r), hermitian_power(c, s)) +
                        beta * hadamard(hermitian_power(b, r), hermitian_power(d, s));
  add_order(o, "301", rhs, lhs, tol);
  return finish(std::move(o));
}

CheckOutcome check_t0_303(const SectorMatrix& a, const SectorMatrix& b, const SectorMatrix& c,
                          const SectorMatrix& d, double alpha, double beta, double r,
                          const TolerancePolicy& tol) {
  require_positive_weights(alpha, beta, "t0_303");
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidArgument, "t0_303: r must lie in (0,1)");
  CheckOutcome o = start("t0_303");
  const double s = 1.0 - r;
  const double theta = common_theta({&a, &b, &c, &d});

  const Matrix ar = principal_power(a.matrix(), r, tol);
  const Matrix cs = principal_power(c.matrix(), s, tol);
  const Matrix br = principal_power(b.matrix(), r, tol);
  const Matrix ds = principal_power(d.matrix(), s, tol);
  if (!sign_ok_nonneg(hermitian_sign(hadamard(im_part(ar), im_part(cs)), tol)) ||
      !sign_ok_nonneg(hermitian_sign(hadamard(im_part(br), im_part(ds)), tol))) {
    return reject(o, filter::kSignMiss);
  }

  const Matrix p = alpha * a.matrix() + beta * b.matrix();
  const Matrix q = alpha * c.matrix() + beta * d.matrix();
  const Hermitian lhs = re_part(alpha * hadamard(ar, cs) + beta * hadamard(br, ds));
  const Hermitian rhs =
      hadamard(re_part(principal_power(p, r, tol)), re_part(principal_power(q, s, tol))) * sec2(theta);
  add_order(o, "303", lhs, rhs, tol);
  return finish(std::move(o));
}

// ---------------------------------------------------------------------------

namespace {

struct Sides {
  Hermitian lhs;
  Hermitian rhs;
};

template <class Product>
Sides reverse_sides(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                    double alpha, double beta, double r, Product product) {
  const double s = 1.0 - r;
  Sides out;
  out.lhs = product(hermitian_power(alpha * a + beta * b, r), hermitian_power(alpha * c + beta * d, s));
  out.rhs = alpha * product(hermitian_power(a, r), hermitian_power(c, s)) +
            beta * product(hermitian_power(b, r), hermitian_power(d, s));
  return out;
}

Sides kron_sides(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d, double alpha,
                 double beta, double r) {
  return reverse_sides(a, b, c, d, alpha, beta, r,
                       [](const Hermitian& x, const Hermitian& y) { return kronecker(x, y); });
}

Sides hadamard_sides(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                     double alpha, double beta, double r) {
  return reverse_sides(a, b, c, d, alpha, beta, r,
                       [](const Hermitian& x, const Hermitian& y) { return hadamard(x, y); });
}

}  // namespace

Hermitian p1_321_difference(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                            double alpha, double beta, double r) {
  const Sides s = kron_sides(a, b, c, d, alpha, beta, r);
  return s.rhs - s.lhs;
}

Hermitian p1_321_difference_swapped(const Hermitian& a, const Hermitian& b, const Hermitian& c,
                                    const Hermitian& d, double alpha, double beta, double r) {
  const Sides s = kron_sides(c, d, a, b, alpha, beta, 1.0 - r);
  return s.rhs - s.lhs;
}

CheckOutcome check_p1_321(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                          double alpha, double beta, double r, const TolerancePolicy& tol) {
  require_positive_weights(alpha, beta, "p1_321");
  require_reverse_range(r, "p1_321");
  for (const Hermitian* h : {&a, &b, &c, &d}) require_pd(*h, "p1_321");
  CheckOutcome o = start("p1_321");
  const Sides s = kron_sides(a, b, c, d, alpha, beta, r);
  add_order(o, "321", s.lhs, s.rhs, tol);
  return finish(std::move(o));
}

Hermitian t1_308_difference(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                            double alpha, double beta, double r) {
  const Sides s = hadamard_sides(a, b, c, d, alpha, beta, r);
  return s.rhs - s.lhs;
}

CheckOutcome check_t1_308(const Hermitian& a, const Hermitian& b, const Hermitian& c, const Hermitian& d,
                          double alpha, double beta, double r, const TolerancePolicy& tol) {
  require_positive_weights(alpha, beta, "t1_308");
  require_reverse_range(r, "t1_308");
  for (const Hermitian* h : {&a, &b, &c, &d}) require_pd(*h, "t1_308");
  CheckOutcome o = start("t1_308");
  const Sides s = hadamard_sides(a, b, c, d, alpha, beta, r);
  add_order(o, "308", s.lhs, s.rhs, tol);

  const Matrix v = canonical_isometry(a.dim());
  const Hermitian compressed(v.adjoint() * p1_321_difference(a, b, c, d, alpha, beta, r).matrix() * v);
  const double defect = frobenius_norm((compressed - (s.rhs - s.lhs)).matrix());
  o.notes.push_back(format("compression defect against the Kronecker form ", defect));
  return finish(std::move(o));
}

CheckOutcome check_305(const SectorMatrix& a, const SectorMatrix& b, const SectorMatrix& c,
                       const SectorMatrix& d, double alpha, double beta, double r, const TolerancePolicy& tol) {
  require_positive_weights(alpha, beta, "e305");
  require_reverse_range(r, "e305");
  CheckOutcome o = start("e305");
  const double s = 1.0 - r;
  const double theta = common_theta({&a, &b, &c, &d});

  const Matrix ar = principal_power(a.matrix(), r, tol);
  const Matrix cs = principal_power(c.matrix(), s, tol);
  const Matrix br = principal_power(b.matrix(), r, tol);
  const Matrix ds = principal_power(d.matrix(), s, tol);
  if (!sign_ok_nonpos(hermitian_sign(hadamard(im_part(ar), im_part(cs)), tol)) ||
      !sign_ok_nonpos(hermitian_sign(hadamard(im_part(br), im_part(ds)), tol))) {
    return reject(o, filter::kSignMiss);
  }

  const Hermitian re_p = re_part(alpha * a.matrix() + beta * b.matrix());
  const Hermitian re_q = re_part(alpha * c.matrix() + beta * d.matrix());
  const Hermitian lhs = hadamard(hermitian_power(re_p, r), hermitian_power(re_q, s));
  const Hermitian rhs = re_part(alpha * hadamard(ar, cs) + beta * hadamard(br, ds)) * sec2(theta);
  add_order(o, "305", lhs, rhs, tol);
  return finish(std::move(o));
}

CheckOutcome check_joint_convexity(ConvexityKind kind, double r, const Hermitian& x1, const Hermitian& y1,
                                   const Hermitian& x2, const Hermitian& y2, const TolerancePolicy& tol) {
  CheckOutcome o = start(kind == ConvexityKind::BAinvB ? "jc_L1" : "jc_p1");
  require_pd(x1, o.theorem_id.c_str());
  require_pd(x2, o.theorem_id.c_str());
  std::function<Hermitian(const Hermitian&, const Hermitian&)> f;
  if (kind == ConvexityKind::BAinvB) {
    f = [](const Hermitian& x, const Hermitian& y) {
      return Hermitian(y.matrix().adjoint() * checked_inverse(x.matrix()) * y.matrix());
    };
  } else {
    require_reverse_range(r, "jc_p1");
    require_pd(y1, "jc_p1");
    require_pd(y2, "jc_p1");
    f = [r](const Hermitian& x, const Hermitian& y) {
      return kronecker(hermitian_power(x, r), hermitian_power(y, 1.0 - r));
    };
  }
  const Hermitian xm = (x1 + x2) * 0.5, ym = (y1 + y2) * 0.5;
  add_order(o, "midpoint", f(xm, ym), (f(x1, y1) + f(x2, y2)) * 0.5, tol);
  return finish(std::move(o));
}

// ---------------------------------------------------------------------------

RemarkMatrices remark_matrices() {
  const cdouble i(0.0, 1.0);
  Matrix a(2, 2), b(2, 2);
  a << 1.0 - i, 1.0 + i, -1.0 + i, 1.0 + i;
  b << 1.0 + i, 1.0 + i, -1.0 + i, 1.0 - i;
  return {a, b};
}

CheckOutcome check_remark(const TolerancePolicy& tol) {
  CheckOutcome o = start("remark");
  const RemarkMatrices rm = remark_matrices();
  const PositiveMap phi = PositiveMap::identity(2);
  const Hermitian lhs = re_part(phi.apply(hadamard(rm.a, rm.b)));
  const Hermitian rhs = hadamard(re_part(phi.apply(rm.a)), re_part(phi.apply(rm.b)));
  const Hermitian diff = lhs - rhs;
  const HermitianEigen e = eig_hermitian(diff);
  const double gap = spectral_norm(diff);
  // Equality fails when the gap clearly exceeds 0.5.
  add_bound(o, "equality-fails", 0.5, gap, tol);
  std::ostringstream os;
  os.precision(12);
  os << "difference spectrum {" << e.values(0) << ", " << e.values(1) << "}";
  o.notes.push_back(os.str());
  const SignVerdict sign = hermitian_sign(diff, tol);
  o.notes.push_back(sign == SignVerdict::Indefinite ? "difference is indefinite: neither side dominates"
                                                    : "difference is semidefinite");
  o.notes.push_back(format("spectral norm of difference ", gap));
  return finish(std::move(o));
}

CheckOutcome check_62(const PositiveMap& phi, const SectorMatrix& a, const SectorMatrix& b,
                      const TolerancePolicy& tol) {
  CheckOutcome o = start("e62");
  if (!phi.flags().unital) return reject(o, filter::kMapNotUnital);
  if (!phi.flags().hadamard_multiplicative) return reject(o, filter::kMapNotMultiplicative);
  if (!sign_ok_nonpos(hermitian_sign(hadamard(a.im(), b.im()), tol))) return reject(o, filter::kSignMiss);
  const Hermitian lhs = hadamard(re_part(phi.apply(a.matrix())), re_part(phi.apply(b.matrix())));
  const Hermitian rhs = re_part(phi.apply(hadamard(a.matrix(), b.matrix())));
  add_order(o, "62", lhs, rhs, tol);
  return finish(std::move(o));
}

CheckOutcome check_24(const ScalarFunction& f, const SectorMatrix& a, const TolerancePolicy& tol) {
  CheckOutcome o = start("e24");
  if (!f.in_class_m()) return reject(o, filter::kFunctionFlags, "function is not operator monotone and normalized");
  const Hermitian re_f = re_part(apply_function(a.matrix(), f, tol));
  const Hermitian f_re = apply_hermitian_function(a.re(), f);
  add_order(o, "lower", f_re, re_f, tol);
  add_order(o, "upper", re_f, f_re * sec2(a.theta()), tol);
  return finish(std::move(o));
}

CheckOutcome check_39(const ScalarFunction& f, const PositiveMap& phi, const Hermitian& a, const Hermitian& b,
                      const TolerancePolicy& tol) {
  CheckOutcome o = start("e39");
  if (!f.flags().supermultiplicative || !f.flags().operator_concave) {
    return reject(o, filter::kFunctionFlags, "function is not supermultiplicative and operator concave");
  }
  if (!phi.flags().unital) return reject(o, filter::kMapNotUnital);
  if (!phi.flags().hadamard_multiplicative) return reject(o, filter::kMapNotMultiplicative);
  const Hermitian lhs(phi.apply(hadamard(apply_hermitian_function(a, f), apply_hermitian_function(b, f)).matrix()));
  const Hermitian rhs = apply_hermitian_function(Hermitian(phi.apply(hadamard(a, b).matrix())), f);
  add_order(o, "39", lhs, rhs, tol);
  return finish(std::move(o));
}

CheckOutcome check_t4(const ScalarFunction& f, const PositiveMap& phi, const SectorMatrix& a,
                      const SectorMatrix& b, const TolerancePolicy& tol) {
  CheckOutcome o = start("t4");
  if (!f.flags().supermultiplicative || !f.flags().operator_concave) {
    return reject(o, filter::kFunctionFlags, "function is not supermultiplicative and operator concave");
  }
  if (!phi.flags().unital) return reject(o, filter::kMapNotUnital);
  if (!phi.flags().hadamard_multiplicative) return reject(o, filter::kMapNotMultiplicative);
  if (!sign_ok_nonpos(hermitian_sign(hadamard(a.im(), b.im()), tol))) return reject(o, filter::kSignMiss);

  const Matrix image = phi.apply(hadamard(a.matrix(), b.matrix()));
  if (!(lambda_min(re_part(image)) > 0.0)) return reject(o, filter::kNotAccretive);

  const double theta = common_theta({&a, &b});
  const double s2 = sec2(theta);
  const Hermitian lhs = hadamard(re_part(phi.apply(apply_function(a.matrix(), f, tol))),
                                 re_part(phi.apply(apply_function(b.matrix(), f, tol))));
  const Hermitian rhs = re_part(apply_function(image, f, tol)) * (s2 * s2);
  add_order(o, "t4", lhs, rhs, tol);
  return finish(std::move(o));
}

// ---------------------------------------------------------------------------

namespace {

struct MeanSides {
  Hermitian x;      // Phi(Re(A s1 B))
  Hermitian y;      // Phi(Re(A s2 B))
  Hermitian y_alt;  // Phi(Re(A s2 B)^-1)
};

// Shared hypotheses of the Kantorovich-type statements. Returns the filter
// reason, or nullptr when the inputs qualify.
const char* mean_hypotheses(const PositiveMap& phi, const SectorMatrix& a, const SectorMatrix& b, double m,
                            double M, const MeanTriple& means, const TolerancePolicy& tol) {
  if (!phi.flags().unital) return filter::kMapNotUnital;
  if (!mean_between(means.sigma1, means.sigma) || !mean_between(means.sigma2, means.sigma)) {
    return filter::kMeanNotBetween;
  }
  for (const SectorMatrix* x : {&a, &b}) {
    const HermitianEigen e = eig_hermitian(x->re());
    const double lo = e.values(0), hi = e.values(e.values.size() - 1);
    if (lo < m - tol.bound(m) || hi > M + tol.bound(M)) return filter::kBoundsMiss;
  }
  return nullptr;
}

MeanSides mean_sides(const PositiveMap& phi, const SectorMatrix& a, const SectorMatrix& b,
                     const MeanTriple& means, const TolerancePolicy& tol) {
  const Hermitian re1 = re_part(operator_mean(a.matrix(), b.matrix(), means.sigma1, tol));
  const Hermitian re2 = re_part(operator_mean(a.matrix(), b.matrix(), means.sigma2, tol));
  MeanSides s;
  s.x = Hermitian(phi.apply(re1.matrix()));
  s.y = Hermitian(phi.apply(re2.matrix()));
  if (lambda_min(re2) > 0.0) s.y_alt = Hermitian(phi.apply(checked_inverse(re2).matrix()));
  return s;
}

}  // namespace

CheckOutcome check_m1(const PositiveMap& phi, const SectorMatrix& a, const SectorMatrix& b, double m, double M,
                      const MeanTriple& means, const TolerancePolicy& tol) {
  CheckOutcome o = start("m1");
  if (const char* why = mean_hypotheses(phi, a, b, m, M, means, tol)) return reject(o, why);
  const MeanSides s = mean_sides(phi, a, b, means, tol);
  if (!(lambda_min(s.y) > 0.0)) return reject(o, filter::kNotPositiveDefinite);

  const double theta = common_theta({&a, &b});
  const double c2 = std::cos(theta) * std::cos(theta);
  const Hermitian rhs = Hermitian::identity(s.x.dim()) * (M + m);
  const Hermitian lhs = s.x * c2 + checked_inverse(s.y) * (m * M);
  add_order(o, "m1", lhs, rhs, tol);

  // Second reading: the map applied to the inverse instead of inverting the image.
  if (s.y_alt.dim() > 0) {
    const LoewnerVerdict alt = loewner_leq(s.x * c2 + s.y_alt * (m * M), rhs, tol);
    o.notes.push_back(format("map-of-inverse reading residual ", alt.residual));
    if (alt.holds != o.links.back().holds()) o.notes.push_back("readings of the inverse disagree on this instance");
  }
  return finish(std::move(o));
}

CheckOutcome check_K(const PositiveMap& phi, const SectorMatrix& a, const SectorMatrix& b, double m, double M,
                     const MeanTriple& means, const TolerancePolicy& tol) {
  CheckOutcome o = start("thmK");
  if (const char* why = mean_hypotheses(phi, a, b, m, M, means, tol)) return reject(o, why);
  if (!sign_ok_nonpos(hermitian_sign(hadamard(a.im(), b.im()), tol))) return reject(o, filter::kSignMiss);
  const MeanSides s = mean_sides(phi, a, b, means, tol);
  if (!(lambda_min(s.x) > 0.0) || !(lambda_min(s.y) > 0.0)) return reject(o, filter::kNotPositiveDefinite);

  const double theta = common_theta({&a, &b});
  const Matrix prod = hadamard(hermitian_power(s.x, 0.5), hermitian_power(s.y, -0.5)).matrix();
  const double bound = std::sqrt(kantorovich(m, M)) / std::cos(theta);
  add_bound(o, "K", norm(prod, NormKind::Spectral), bound, tol);
  o.notes.push_back(format("frobenius norm ", norm(prod, NormKind::Frobenius)));
  o.notes.push_back(format("trace norm ", norm(prod, NormKind::Trace)));
  o.notes.push_back(format("bound ", bound));
  return finish(std::move(o));
}

CheckOutcome check_25(const Hermitian& a, const Hermitian& b, double t, std::span<const NormKind> kinds,
                      const TolerancePolicy& tol) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::InvalidArgument, "e25: t must lie in [0,1]");
  require_pd(a, "e25");
  require_pd(b, "e25");
  CheckOutcome o = start("e25");
  const Matrix half = hadamard(hermitian_power(a, 0.5), hermitian_power(b, 0.5)).matrix();
  const Matrix mid = (hadamard(hermitian_power(a, t), hermitian_power(b, 1.0 - t)) +
                      hadamard(hermitian_power(a, 1.0 - t), hermitian_power(b, t)))
                         .matrix();
  const Matrix sum = (a + b).matrix();
  for (NormKind k : kinds) {
    const double lo = 2.0 * norm(half, k), md = norm(mid, k), hi = norm(sum, k);
    add_bound(o, std::string("lower:") + to_string(k), lo, md, tol);
    add_bound(o, std::string("upper:") + to_string(k), md, hi, tol);
  }
  return finish(std::move(o));
}

// ---------------------------------------------------------------------------

CheckOutcome check_41(const Hermitian& a, const Hermitian& b, const TolerancePolicy& tol) {
  require_pd(a, "e41");
  require_pd(b, "e41");
  CheckOutcome o = start("e41");
  const HermitianEigen ek = eig_hermitian(kronecker(a, b));
  const double mu = ek.values(0), lambda = ek.values(ek.values.size() - 1);
  const double k = kantorovich(mu, lambda);
  const Hermitian prod_inv = checked_inverse(hadamard(a, b));
  const Hermitian inv_prod = hadamard(checked_inverse(a), checked_inverse(b));
  add_order(o, "lower", prod_inv, inv_prod, tol);
  add_order(o, "upper", inv_prod, prod_inv * k, tol);
  o.notes.push_back(format("kantorovich factor ", k));
  return finish(std::move(o));
}

CheckOutcome check_41_0(const Hermitian& a, const Matrix& x, const TolerancePolicy& tol) {
  require_pd(a, "e41_0");
  CheckOutcome o = start("e41_0");
  if (x.rows() != a.dim() || x.cols() < 1 || x.cols() > x.rows()) return reject(o, filter::kInvalidInput);
  if (frobenius_norm(x.adjoint() * x - Matrix::Identity(x.cols(), x.cols())) > 1e-12 * x.cols()) {
    return reject(o, filter::kNotIsometry);
  }
  const HermitianEigen e = eig_hermitian(a);
  const double k = kantorovich(e.values(0), e.values(e.values.size() - 1));
  const Hermitian compressed_inv = checked_inverse(Hermitian(x.adjoint() * a.matrix() * x));
  const Hermitian inv_compressed(x.adjoint() * checked_inverse(a.matrix()) * x);
  add_order(o, "lower", compressed_inv, inv_compressed, tol);
  add_order(o, "upper", inv_compressed, compressed_inv * k, tol);
  return finish(std::move(o));
}

CheckOutcome check_t2(const SectorMatrix& a, const SectorMatrix& b, const TolerancePolicy& tol) {
  CheckOutcome o = start("t2");
  if (!sign_ok_nonpos(hermitian_sign(hadamard(a.im(), b.im()), tol))) return reject(o, filter::kSignMiss);
  Matrix prod_inv;
  try {
    prod_inv = checked_inverse(hadamard(a.matrix(), b.matrix()));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Singular) throw;
    return reject(o, filter::kSingularProduct, e.what());
  }
  const double c = std::cos(common_theta({&a, &b}));
  const Hermitian lhs = re_part(prod_inv) * (c * c * c * c);
  const Hermitian rhs = hadamard(re_part(checked_inverse(a.matrix())), re_part(checked_inverse(b.matrix())));
  add_order(o, "t2", lhs, rhs, tol);
  return finish(std::move(o));
}

CheckOutcome check_t3(const SectorMatrix& a, const SectorMatrix& b, T3Variant variant, const TolerancePolicy& tol) {
  CheckOutcome o = start(variant == T3Variant::One ? "t3v1" : "t3v2");
  const double theta = common_theta({&a, &b});
  const Matrix a_inv = checked_inverse(a.matrix());
  const Matrix b_inv = checked_inverse(b.matrix());
  const Matrix prod = hadamard(a.matrix(), b.matrix());

  Hermitian spectral_source;
  if (variant == T3Variant::One) {
    if (!sign_ok_nonpos(hermitian_sign(hadamard(im_part(a_inv), im_part(b_inv)), tol))) {
      return reject(o, filter::kSignMiss);
    }
    if (!in_sector(prod, theta, tol).inside) return reject(o, filter::kNotInSector, "A o B is not in the common sector");
    spectral_source = re_part(kronecker(a.matrix(), b.matrix()));
  } else {
    if (!sign_ok_nonneg(hermitian_sign(hadamard(a.im(), b.im()), tol))) return reject(o, filter::kSignMiss);
    const Hermitian re_prod = re_part(prod);
    if (lambda_min(re_prod) < -tol.bound(spectral_norm(re_prod))) {
      return reject(o, filter::kNotAccretive, "Re(A o B) is not positive semidefinite");
    }
    spectral_source = kronecker(a.re(), b.re());
  }

  Matrix prod_inv;
  try {
    prod_inv = checked_inverse(prod);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Singular) throw;
    return reject(o, filter::kSingularProduct, e.what());
  }
  const HermitianEigen e = eig_hermitian(spectral_source);
  const double mu = e.values(0), lambda = e.values(e.values.size() - 1);
  if (!(mu > 0.0)) return reject(o, filter::kNotPositiveDefinite);
  const double factor = kantorovich(mu, lambda) * sec2(theta);

  const Hermitian lhs = hadamard(re_part(a_inv), re_part(b_inv));
  const Hermitian rhs = re_part(prod_inv) * factor;
  add_order(o, o.theorem_id, lhs, rhs, tol);
  o.notes.push_back(format("constant ", factor));
  return finish(std::move(o));
}

}  // namespace sectorlab
