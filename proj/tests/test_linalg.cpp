#include "doctest.h"
#include "helpers.hpp"
#include "posmap/linalg.hpp"

using namespace posmap;

namespace {
const ToleranceConfig tol;

Matrix swap_gate() {
  Matrix s = Matrix::Zero(4, 4);
  s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
  return s;
}
}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("eig_hermitian on hand-computed matrices") {
  Matrix pauli_x(2, 2);
  pauli_x << 0, 1, 1, 0;
  EigH e = eig_hermitian(pauli_x);
  CHECK(e.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(e.eigenvalues(1) == doctest::Approx(1.0));

  e = eig_hermitian(Matrix::Identity(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(e.eigenvalues(i) == doctest::Approx(1.0));

  Matrix m(2, 2);
  m << 2, 1, 1, 3;
  e = eig_hermitian(m);
  const double root5 = std::sqrt(5.0);
  CHECK(e.eigenvalues(0) == doctest::Approx((5.0 - root5) / 2.0).epsilon(1e-12));
  CHECK(e.eigenvalues(1) == doctest::Approx((5.0 + root5) / 2.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian errors") {
  CHECK_THROWS_AS(eig_hermitian(Matrix::Zero(2, 3)), Error);
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(eig_hermitian(bad), Error);
}

TEST_CASE("eig_hermitian reassembles random Hermitian matrices") {
  Rng rng(11);
  for (int n = 0; n < 1000; ++n) {
    const int dim = 2 + static_cast<int>(rng.uniform() * 8);
    const Matrix H = rng.hermitian(dim);
    const EigH e = eig_hermitian(H);
    Matrix rebuilt = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
      rebuilt += e.eigenvalues(i) * e.eigenvectors.col(i) * e.eigenvectors.col(i).adjoint();
    REQUIRE((rebuilt - H).norm() <= 1e-9 * std::max(1.0, H.norm()));
    REQUIRE((e.eigenvectors.adjoint() * e.eigenvectors - Matrix::Identity(dim, dim)).norm() <=
            1e-10 * dim);
    for (int i = 0; i + 1 < dim; ++i) REQUIRE(e.eigenvalues(i) <= e.eigenvalues(i + 1));
  }
}

TEST_CASE("is_psd") {
  CHECK(is_psd(Matrix::Identity(2, 2), tol).psd);
  CHECK(is_psd(Matrix::Identity(2, 2), tol).min_eig == doctest::Approx(1.0));

  Matrix d = Eigen::Vector2cd(1.0, -1e-3).asDiagonal();
  const PsdCheck c = is_psd(d, tol);
  CHECK_FALSE(c.psd);
  CHECK(c.min_eig == doctest::Approx(-1e-3));

  Matrix m(2, 2);
  m << 2, 1, 1, 3;
  const PsdCheck c2 = is_psd(m, tol);
  CHECK(c2.psd);
  CHECK(c2.min_eig == doctest::Approx((5.0 - std::sqrt(5.0)) / 2.0));
}

TEST_CASE("numerical_rank") {
  Rng rng(7);
  for (int n = 0; n < 200; ++n) {
    const int dim = 2 + static_cast<int>(rng.uniform() * 5);
    CHECK(numerical_rank(outer(rng.unit_ket(dim), rng.unit_ket(dim)), tol) == 1);
  }
  CHECK(numerical_rank(Matrix::Zero(3, 3), tol) == 0);
  CHECK(numerical_rank(Matrix(Eigen::Vector3cd(1, 1, 0).asDiagonal()), tol) == 2);
}

TEST_CASE("outer products") {
  const Ket e1 = Ket::Unit(2, 0), e2 = Ket::Unit(2, 1);
  Matrix E11 = Matrix::Zero(2, 2);
  E11(0, 0) = 1;
  CHECK((outer(e1, e1) - E11).norm() == 0.0);

  Ket half(2);
  half << M_SQRT1_2, M_SQRT1_2;
  CHECK((outer(half, half) - Matrix::Constant(2, 2, 0.5)).norm() < 1e-15);

  Matrix E12 = Matrix::Zero(2, 2);
  E12(0, 1) = 1;
  CHECK((outer(e1, e2) - E12).norm() == 0.0);
}

TEST_CASE("transpose_inv basics and the displayed identity") {
  Matrix E12 = Matrix::Zero(2, 2), E21 = Matrix::Zero(2, 2);
  E12(0, 1) = 1;
  E21(1, 0) = 1;
  CHECK((transpose_inv(E12) - E21).norm() == 0.0);

  Rng rng(3);
  const Matrix H = rng.hermitian(3);
  CHECK((transpose_inv(H) - H.conjugate()).norm() < 1e-15);

  Ket a(2), b(2);
  a << Complex(0, 1), 0;
  b << 0, 1;
  CHECK((transpose_inv(outer(a, b)) - outer(b.conjugate(), a.conjugate())).norm() == 0.0);

  CHECK_THROWS_AS(transpose_inv(Matrix::Zero(2, 3)), Error);
}

TEST_CASE("transpose_inv is a linear involutive antimorphism") {
  Rng rng(5);
  for (int n = 0; n < 100; ++n) {
    const Matrix X = rng.matrix(4, 4), Y = rng.matrix(4, 4);
    CHECK((transpose_inv(transpose_inv(X)) - X).norm() == 0.0);
    CHECK((transpose_inv(X + Y) - transpose_inv(X) - transpose_inv(Y)).norm() < 1e-14);
    CHECK((transpose_inv(X * Y) - transpose_inv(Y) * transpose_inv(X)).norm() < 1e-13);
    const Ket xi = rng.ket(4), eta = rng.ket(4);
    CHECK((transpose_inv(outer(xi, eta)) - outer(eta.conjugate(), xi.conjugate())).norm() <
          1e-13);
  }
}

TEST_CASE("partial_transpose_first on the SWAP matrix") {
  // PT1 of SWAP is the Choi matrix of the identity map, sum E_ij (x) E_ij.
  Matrix expected = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) expected(i * 2 + i, j * 2 + j) = 1.0;
  CHECK((partial_transpose_first(swap_gate(), 2, 2) - expected).norm() == 0.0);

  Matrix blockdiag = Matrix::Zero(4, 4);
  blockdiag.block(0, 0, 2, 2) << 1, 2, 3, 4;
  blockdiag.block(2, 2, 2, 2) << 5, 6, 7, 8;
  CHECK((partial_transpose_first(blockdiag, 2, 2) - blockdiag).norm() == 0.0);

  CHECK_THROWS_AS(partial_transpose_first(Matrix::Zero(5, 5), 2, 2), Error);
}

TEST_CASE("partial_transpose_first properties") {
  Rng rng(9);
  for (int n = 0; n < 100; ++n) {
    const int k = 2 + static_cast<int>(rng.uniform() * 3);
    const int h = 2 + static_cast<int>(rng.uniform() * 3);
    const Matrix J = rng.hermitian(k * h);
    const Matrix P = partial_transpose_first(J, k, h);
    CHECK((partial_transpose_first(P, k, h) - J).norm() == 0.0);
    CHECK(std::abs((P.trace() - J.trace())) < 1e-13);
    CHECK((P - P.adjoint()).norm() < 1e-14);
  }
}

TEST_CASE("orthonormal_complement and canonical_phase") {
  Rng rng(13);
  for (int n = 0; n < 50; ++n) {
    const int dim = 2 + static_cast<int>(rng.uniform() * 5);
    const Ket x = rng.unit_ket(dim);
    const Matrix B = orthonormal_complement(x);
    CHECK((B.adjoint() * B - Matrix::Identity(dim - 1, dim - 1)).norm() < 1e-12);
    CHECK((B.adjoint() * x).norm() < 1e-12);

    const Ket v = canonical_phase(x);
    int pivot = 0;
    for (int i = 1; i < dim; ++i)
      if (std::abs(v(i)) > std::abs(v(pivot)) * (1.0 + 1e-12)) pivot = i;
    CHECK(v(pivot).imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(v(pivot).real() >= 0.0);
  }
}

TEST_SUITE_END();
