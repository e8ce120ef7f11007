#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sectorlab/inequalities.hpp"
#include "sectorlab/linalg.hpp"
#include "sectorlab/sector.hpp"
#include "support.hpp"

using namespace sectorlab;
using testing::diag;
using testing::scalar;

namespace {

const cdouble I1(0.0, 1.0);

Matrix two_2i() {
  Matrix m(2, 2);
  m << 2.0, 2.0 * I1, -2.0 * I1, 2.0;
  return m;
}

}  // namespace

TEST_CASE("hadamard of 1+i with itself is 2i") {
  Matrix p = hadamard(scalar({1.0, 1.0}), scalar({1.0, 1.0}));
  CHECK(p(0, 0) == cdouble(0.0, 2.0));
}

TEST_CASE("hadamard of identities is the identity") {
  for (Index n = 1; n <= 5; ++n) CHECK(hadamard(Matrix::Identity(n, n), Matrix::Identity(n, n)) == Matrix::Identity(n, n));
}

TEST_CASE("hadamard of the remark matrices") {
  RemarkMatrices rm = remark_matrices();
  CHECK(hadamard(rm.a, rm.b) == two_2i());
}

TEST_CASE("hadamard rejects mismatched shapes") {
  CHECK_THROWS_AS(hadamard(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), Error);
}

TEST_CASE("kronecker small cases") {
  CHECK(kronecker(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) == Matrix::Identity(4, 4));
  CHECK(kronecker(scalar(2.0), scalar(3.0))(0, 0) == cdouble(6.0));
  Matrix a = diag({1.0, 2.0});
  Matrix b(2, 2);
  b << 1.0, I1, 2.0, 3.0;
  Matrix k = kronecker(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(1, 0) == cdouble(2.0));
  CHECK(k(2, 3) == I1 * 2.0);
  CHECK(k(0, 2) == cdouble(0.0));
}

TEST_CASE("canonical isometry layout") {
  Matrix v1 = canonical_isometry(1);
  CHECK(v1.rows() == 1);
  CHECK(v1(0, 0) == cdouble(1.0));
  Matrix v2 = canonical_isometry(2);
  CHECK(v2.rows() == 4);
  CHECK(v2.cols() == 2);
  CHECK(v2(0, 0) == cdouble(1.0));
  CHECK(v2(3, 1) == cdouble(1.0));
  CHECK(v2.cwiseAbs().sum() == doctest::Approx(2.0));
  for (Index n = 1; n <= 5; ++n) {
    Matrix v = canonical_isometry(n);
    CHECK((v.adjoint() * v - Matrix::Identity(n, n)).norm() == 0.0);
  }
}

TEST_CASE("hadamard is the isometry compression of the kronecker product") {
  Rng rng(20240601);
  for (Index n = 1; n <= 6; ++n) {
    Matrix v = canonical_isometry(n);
    for (int k = 0; k < 100; ++k) {
      Matrix a = random_gaussian(n, n, rng);
      Matrix b = random_gaussian(n, n, rng);
      double err = frobenius_norm(v.adjoint() * kronecker(a, b) * v - hadamard(a, b));
      CHECK(err <= 1e-12 * (1.0 + frobenius_norm(a) * frobenius_norm(b)));
    }
  }
}

TEST_CASE("mixed product law") {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    Index n = 1 + static_cast<Index>(k % 4);
    Matrix a = random_gaussian(n, n, rng), b = random_gaussian(n, n, rng);
    Matrix c = random_gaussian(n, n, rng), d = random_gaussian(n, n, rng);
    Matrix lhs = kronecker(a, b) * kronecker(c, d);
    Matrix rhs = kronecker(a * c, b * d);
    CHECK(frobenius_norm(lhs - rhs) <= 1e-12 * (1.0 + frobenius_norm(rhs)));
  }
}

TEST_CASE("hadamard is bilinear in scalars") {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    Matrix a = random_gaussian(3, 3, rng), b = random_gaussian(3, 3, rng);
    cdouble al(0.7, -1.3), be(-2.1, 0.4);
    Matrix lhs = hadamard(Matrix(al * a), Matrix(be * b));
    Matrix rhs = al * be * hadamard(a, b);
    CHECK(frobenius_norm(lhs - rhs) <= 1e-14 * (1.0 + frobenius_norm(rhs)));
  }
}

TEST_CASE("cartesian examples") {
  Cartesian c = cartesian(remark_matrices().a);
  CHECK(c.re.matrix() == Matrix::Identity(2, 2));
  Rng rng(5);
  Hermitian h = random_hermitian(3, rng);
  Cartesian ch = cartesian(h.matrix());
  CHECK(frobenius_norm(ch.re.matrix() - h.matrix()) == 0.0);
  CHECK(frobenius_norm(ch.im.matrix()) == 0.0);
  Cartesian ci = cartesian(I1 * h.matrix());
  CHECK(frobenius_norm(ci.re.matrix()) <= 1e-15);
  CHECK(frobenius_norm(ci.im.matrix() - h.matrix()) <= 1e-15);
}

TEST_CASE("real part of a hadamard product splits into cartesian parts") {
  Rng rng(99);
  for (int k = 0; k < 200; ++k) {
    Index n = 1 + static_cast<Index>(k % 5);
    Matrix a = random_gaussian(n, n, rng), b = random_gaussian(n, n, rng);
    Matrix lhs = re_part(hadamard(a, b)).matrix();
    Matrix rhs = hadamard(re_part(a), re_part(b)).matrix() - hadamard(im_part(a), im_part(b)).matrix();
    CHECK(frobenius_norm(lhs - rhs) <= 1e-12 * (1.0 + frobenius_norm(rhs)));
  }
}

TEST_CASE("hermitian construction is exactly symmetric") {
  Rng rng(1);
  Matrix g = random_gaussian(4, 4, rng);
  Hermitian h(g);
  for (Index i = 0; i < 4; ++i) {
    CHECK(h.matrix()(i, i).imag() == 0.0);
    for (Index j = 0; j < 4; ++j) CHECK(h.matrix()(i, j) == std::conj(h.matrix()(j, i)));
  }
}

TEST_CASE("loewner examples") {
  TolerancePolicy tol;
  LoewnerVerdict v1 = loewner_leq(Hermitian::zero(3), Hermitian::identity(3), tol);
  CHECK(v1.holds);
  CHECK(v1.residual == doctest::Approx(1.0));
  LoewnerVerdict v2 = loewner_leq(Hermitian::identity(2), Hermitian(two_2i()), tol);
  CHECK_FALSE(v2.holds);
  CHECK(v2.residual == doctest::Approx(-1.0).epsilon(1e-12));
  Rng rng(4);
  Hermitian h = random_hermitian(4, rng);
  LoewnerVerdict v3 = loewner_leq(h, h, tol);
  CHECK(v3.holds);
  CHECK(v3.residual == 0.0);
}

TEST_CASE("loewner order is monotone under hadamard products of psd increments") {
  Rng rng(77);
  for (int k = 0; k < 100; ++k) {
    Hermitian a2 = random_pd(3, rng), b2 = random_pd(3, rng);
    Hermitian a1 = a2 + random_pd(3, rng, 0.0);
    Hermitian b1 = b2 + random_pd(3, rng, 0.0);
    CHECK(loewner_leq(hadamard(a2, b2), hadamard(a1, b1)).holds);
  }
}

TEST_CASE("loewner order is antisymmetric up to tolerance") {
  Rng rng(8);
  for (int k = 0; k < 50; ++k) {
    Hermitian a = random_hermitian(3, rng);
    Hermitian b = random_hermitian(3, rng);
    if (loewner_leq(a, b).holds && loewner_leq(b, a).holds) CHECK(frobenius_norm(a.matrix() - b.matrix()) <= 1e-7);
  }
}

TEST_CASE("hermitian eigenvalue examples") {
  HermitianEigen e1 = eig_hermitian(Hermitian::identity(3));
  for (Index i = 0; i < 3; ++i) CHECK(e1.values(i) == doctest::Approx(1.0));
  HermitianEigen e2 = eig_hermitian(Hermitian(two_2i()));
  CHECK(std::abs(e2.values(0)) <= 1e-14);
  CHECK(e2.values(1) == doctest::Approx(4.0));
  HermitianEigen e3 = eig_hermitian(Hermitian(diag({4.0, 9.0})));
  CHECK(e3.values(0) == doctest::Approx(4.0));
  CHECK(e3.values(1) == doctest::Approx(9.0));
  Rng rng(6);
  Hermitian h = random_hermitian(5, rng);
  HermitianEigen e = eig_hermitian(h);
  CHECK((e.vectors.adjoint() * e.vectors - Matrix::Identity(5, 5)).norm() <= 1e-13);
  Matrix back = e.vectors * e.values.cast<cdouble>().asDiagonal() * e.vectors.adjoint();
  CHECK(frobenius_norm(back - h.matrix()) <= 1e-12 * frobenius_norm(h.matrix()));
}

TEST_CASE("general eigen decomposition") {
  GeneralEigen d = eig_general(diag({{1.0, 1.0}, 2.0, {0.5, -3.0}}));
  CHECK(d.condition == doctest::Approx(1.0));
  Rng rng(12);
  Hermitian h = random_hermitian(4, rng);
  GeneralEigen g = eig_general(h.matrix());
  std::vector<double> re;
  for (Index i = 0; i < 4; ++i) {
    CHECK(std::abs(g.values(i).imag()) <= 1e-10);
    re.push_back(g.values(i).real());
  }
  std::sort(re.begin(), re.end());
  RealVector ref = eig_hermitian(h).values;
  for (Index i = 0; i < 4; ++i) CHECK(std::abs(re[static_cast<std::size_t>(i)] - ref(i)) <= 1e-10);
  Matrix jordan(2, 2);
  jordan << 1.0, 1.0, 1e-18, 1.0;
  CHECK_THROWS_AS(eig_general(jordan), Error);
  try {
    eig_general(jordan);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IllConditioned);
  }
}

TEST_CASE("norm examples and unitary invariance") {
  for (Index n = 1; n <= 4; ++n) {
    CHECK(norm(Matrix::Identity(n, n), NormKind::Spectral) == doctest::Approx(1.0));
    CHECK(norm(Matrix::Identity(n, n), NormKind::Trace) == doctest::Approx(static_cast<double>(n)));
  }
  Matrix d = diag({3.0, -4.0});
  CHECK(norm(d, NormKind::Spectral) == doctest::Approx(4.0));
  CHECK(norm(d, NormKind::Frobenius) == doctest::Approx(5.0));
  CHECK(norm(d, NormKind::Trace) == doctest::Approx(7.0));
  Rng rng(21);
  for (int k = 0; k < 30; ++k) {
    Matrix a = random_gaussian(4, 4, rng);
    Matrix u = random_unitary(4, rng), v = random_unitary(4, rng);
    for (NormKind kind : {NormKind::Spectral, NormKind::Frobenius, NormKind::Trace})
      CHECK(std::abs(norm(u * a * v, kind) - norm(a, kind)) <= 1e-10 * (1.0 + norm(a, kind)));
  }
}

TEST_CASE("inverse and power guards") {
  Matrix sing = Matrix::Zero(2, 2);
  sing(0, 0) = 1.0;
  CHECK_THROWS_AS(checked_inverse(sing), Error);
  Hermitian h(diag({4.0, 9.0}));
  Hermitian r = hermitian_power(h, 0.5);
  CHECK(r.matrix()(0, 0).real() == doctest::Approx(2.0));
  CHECK(r.matrix()(1, 1).real() == doctest::Approx(3.0));
  Matrix nan = Matrix::Identity(2, 2);
  nan(0, 1) = std::nan("");
  CHECK_THROWS_AS(require_finite(nan, "x"), Error);
}

TEST_CASE("tolerance policy validation") {
  TolerancePolicy t;
  CHECK(t.bound(10.0) == doctest::Approx(1e-9 + 1e-7));
  t.rel_tol = -1.0;
  CHECK_THROWS_AS(t.validate(), Error);
}
