#include "doctest.h"
#include "helpers.hpp"
#include "posmap/faces.hpp"

using namespace posmap;
using namespace posmap::testing;

namespace {
const ToleranceConfig tol;
const double face_tol = 1e-9;
}  // namespace

TEST_SUITE_BEGIN("faces");

TEST_CASE("in_G: Kraus maps, the example map, the zero map") {
  Rng rng(193);
  const Matrix B = rng.matrix(3, 3);
  const Ket xi = rng.unit_ket(3);
  const Ket x = (B * xi).normalized();
  const GMembership g = in_G(from_kraus(B), xi, x, face_tol);
  CHECK(g.member);
  CHECK(g.lambda == doctest::Approx((B * xi).squaredNorm()));
  CHECK_FALSE(g.lambda_clamped);

  CHECK_FALSE(in_G(choi_example(), Ket::Unit(3, 0), Ket::Unit(3, 0), face_tol).member);

  const GMembership z = in_G(LinearMap(3, 3), xi, x, face_tol);
  CHECK(z.member);
  CHECK(z.lambda == 0.0);

  CHECK_THROWS_AS(in_G(choi_example(), Ket(2.0 * xi), x, face_tol), Error);
}

TEST_CASE("in_F: kernels, the identity map, the example map") {
  Rng rng(197);
  Matrix B = rng.matrix(3, 3);
  B.col(2).setZero();  // e3 in the kernel
  CHECK(in_F(from_kraus(B), Ket::Unit(3, 2), rng.unit_ket(3), face_tol));

  const Ket eta = rng.unit_ket(2);
  CHECK_FALSE(in_F(LinearMap::identity(2), eta, eta, face_tol));

  CHECK(in_F(choi_example(), Ket::Unit(3, 0), Ket::Unit(3, 2), face_tol));
}

TEST_CASE("find_G_membership") {
  Rng rng(199);
  const LinearMap kraus = from_kraus(rng.matrix(3, 3));
  auto found = find_G_membership(kraus, 1e-7, 20, 5);
  REQUIRE(found.has_value());
  CHECK(in_G(kraus, found->xi, found->x, 1e-6).member);
  CHECK(found->lambda > 0.0);

  CHECK_FALSE(find_G_membership(choi_example(), 1e-7, 60, 5).has_value());

  const Ket q = rng.unit_ket(2);
  const LinearMap func =
      from_functional(rng.psd(3) + Matrix::Identity(3, 3), outer(q, q), tol);
  CHECK(find_G_membership(func, 1e-7, 20, 5).has_value());

  CHECK_THROWS_AS(find_G_membership(LinearMap(2, 2), 1e-7, 10, 5), Error);
}

TEST_CASE("G is a face: nonnegative combinations stay inside") {
  Rng rng(211);
  for (int n = 0; n < 50; ++n) {
    const Ket xi = rng.unit_ket(3), x = rng.unit_ket(2);
    const LinearMap p1 = cp_map_in_face(rng, 3, 2, xi, x);
    const LinearMap p2 = cp_map_in_face(rng, 3, 2, xi, x, 2);
    REQUIRE(in_G(p1, xi, x, face_tol).member);
    REQUIRE(in_G(p2, xi, x, face_tol).member);
    const double a = rng.uniform() * 3.0, b = rng.uniform() * 3.0;
    REQUIRE(in_G(scale_add(a, p1, b, p2), xi, x, 1e-8).member);
  }
}

TEST_CASE("G equals the intersection of the F faces over the orthocomplement") {
  Rng rng(223);
  for (int n = 0; n < 50; ++n) {
    const Ket xi = rng.unit_ket(3), x = rng.unit_ket(3);
    const LinearMap inside = cp_map_in_face(rng, 3, 3, xi, x);
    const LinearMap outside = random_cp_map(rng, 3, 3, 2);
    const Matrix comp = orthonormal_complement(x);
    for (const LinearMap* phi : {&inside, &outside}) {
      const bool in_g = in_G(*phi, xi, x, face_tol).member;
      bool all_f = true;
      for (int c = 0; c < comp.cols(); ++c)
        all_f = all_f && in_F(*phi, xi, Ket(comp.col(c)), face_tol);
      REQUIRE(in_g == all_f);
    }
  }
}

TEST_CASE("G intersect F at the same vectors means the image vanishes") {
  Rng rng(227);
  const Ket xi = rng.unit_ket(3);
  Matrix B = rng.matrix(3, 3);
  B -= (B * xi) * xi.adjoint();  // B xi = 0
  const LinearMap phi = from_kraus(B);
  const Ket x = rng.unit_ket(3);
  CHECK(in_G(phi, xi, x, face_tol).member);
  CHECK(in_F(phi, xi, x, face_tol));
  CHECK(phi.apply(outer(xi, xi)).norm() < 1e-12);

  // A face member with lambda > 0 is not in F at the same pair.
  const LinearMap pos = cp_map_in_face(rng, 3, 3, xi, x);
  CHECK(in_G(pos, xi, x, face_tol).member);
  CHECK_FALSE(in_F(pos, xi, x, face_tol));
}

TEST_CASE("the exceptional projections of the example map") {
  const auto exceptional = choi_exceptional_projections(tol);
  REQUIRE(exceptional.size() == 4);
  for (const auto& e : exceptional) {
    CHECK(e.rank == 2);
    CHECK((choi_example().apply(e.projection) - e.value).norm() == 0.0);
    CHECK(numerical_rank(e.projection, tol) == 1);  // all four are projections
  }
  CHECK((exceptional[0].projection - Matrix::Constant(3, 3, Complex(1.0 / 3.0, 0))).norm() ==
        0.0);
  CHECK((exceptional[2].value - Matrix(Eigen::Vector3cd(0, 1, 1).asDiagonal())).norm() == 0.0);

  Rng rng(229);
  for (int n = 0; n < 300; ++n) {
    const Ket xi = rng.unit_ket(3);
    REQUIRE(numerical_rank(choi_example().apply(outer(xi, xi)), tol) == 3);
  }
}

TEST_SUITE_END();
