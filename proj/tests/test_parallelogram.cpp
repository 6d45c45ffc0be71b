#include "doctest.h"
#include "helpers.hpp"
#include "posmap/parallelogram.hpp"
#include "posmap/positivity.hpp"

using namespace posmap;
using namespace posmap::testing;

namespace {

const ToleranceConfig tol;

QuadraticFunction restriction_of(const LinearMap& phi, bool positive = false) {
  return QuadraticFunction{phi.dim_in(), phi.dim_out(),
                           [phi](const Ket& eta) { return phi.apply(outer(eta, eta)); },
                           positive};
}

}  // namespace

TEST_SUITE_BEGIN("parallelogram");

TEST_CASE("check_parallelogram: quadratic restrictions pass") {
  Rng rng(277);
  const LinearMap phi = random_cp_map(rng, 3, 3, 2);
  const ParallelogramReport rep = check_parallelogram(restriction_of(phi), 64, tol, 5);
  CHECK(rep.ok);
  CHECK(rep.max_residual <= 1e-10);
}

TEST_CASE("check_parallelogram: quartic functions violate the identity") {
  const QuadraticFunction quartic{
      2, 2,
      [](const Ket& eta) {
        return Matrix(std::pow(eta.squaredNorm(), 2) * Matrix::Identity(2, 2));
      },
      false};
  const ParallelogramReport rep = check_parallelogram(quartic, 16, tol, 5);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violating_pair.has_value());

  const QuadraticFunction quadratic{
      2, 2,
      [](const Ket& eta) { return Matrix(eta.squaredNorm() * Matrix::Identity(2, 2)); },
      true};
  CHECK(check_parallelogram(quadratic, 16, tol, 5).ok);
}

TEST_CASE("reconstruct: the trace map from its norm restriction") {
  const QuadraticFunction Rf{
      2, 2,
      [](const Ket& eta) { return Matrix(eta.squaredNorm() * Matrix::Identity(2, 2)); },
      true};
  const LinearMap phi = reconstruct(Rf, tol);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Matrix expected =
          i == j ? Matrix(Matrix::Identity(2, 2)) : Matrix(Matrix::Zero(2, 2));
      REQUIRE((phi.block(i, j) - expected).norm() < 1e-12);
    }
  // X -> Tr(X) I, checked on a random input.
  Rng rng(281);
  const Matrix X = rng.matrix(2, 2);
  CHECK((phi.apply(X) - X.trace() * Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("reconstruct: round trips through the quadratic restriction") {
  CHECK(map_distance(reconstruct(restriction_of(choi_example()), tol), choi_example()) <
        1e-10);

  Rng rng(283);
  const LinearMap kraus = from_kraus(rng.matrix(3, 3));
  CHECK(map_distance(reconstruct(restriction_of(kraus), tol), kraus) <
        1e-10 * map_norm(kraus));

  for (int n = 0; n < 50; ++n) {
    const int k = 2 + n % 3, h = 2 + (n / 2) % 3;
    const LinearMap phi = random_herm_preserving_map(rng, k, h);
    REQUIRE(map_distance(reconstruct(restriction_of(phi), tol), phi) <=
            1e-9 * std::max(1.0, map_norm(phi)));
  }
}

TEST_CASE("reconstruct: identical inputs give identical outputs") {
  Rng rng(293);
  const LinearMap phi = random_herm_preserving_map(rng, 3, 2);
  const LinearMap a = reconstruct(restriction_of(phi), tol);
  const LinearMap b = reconstruct(restriction_of(phi), tol);
  CHECK(map_distance(a, b) == 0.0);
}

TEST_CASE("reconstruct: positivity propagates to the rebuilt map") {
  Rng rng(307);
  const LinearMap phi = random_cp_map(rng, 3, 3, 2);
  const LinearMap rebuilt = reconstruct(restriction_of(phi, true), tol);
  for (int n = 0; n < 50; ++n) {
    const Ket xi = rng.unit_ket(3);
    REQUIRE(min_eigenvalue(rebuilt.apply(outer(xi, xi))) >= -tol.eps_psd);
  }
}

TEST_CASE("reconstruct_tabulated: grid round trip and corruption detection") {
  Rng rng(331);
  const LinearMap phi = random_herm_preserving_map(rng, 3, 2);
  const std::vector<Ket> grid = reconstruction_grid(3);
  REQUIRE(grid.size() == 36);
  std::vector<Matrix> values;
  for (const Ket& eta : grid) values.push_back(phi.apply(outer(eta, eta)));
  CHECK(map_distance(reconstruct_tabulated(3, 2, values, tol), phi) <
        1e-10 * std::max(1.0, map_norm(phi)));

  values[4](0, 0) += 0.5;  // second (i,j) cell, "+" slot
  CHECK_THROWS_WITH_AS(reconstruct_tabulated(3, 2, values, tol),
                       doctest::Contains("(e_1, e_2)"), Error);
}

TEST_CASE("reconstruct: corrupted evaluators are rejected") {
  Rng rng(311);
  const LinearMap phi = random_cp_map(rng, 2, 2);
  const QuadraticFunction corrupted{
      2, 2,
      [phi](const Ket& eta) {
        Matrix value = phi.apply(outer(eta, eta));
        if ((eta - Ket::Unit(2, 0) - Ket::Unit(2, 1)).norm() < 1e-12) value(0, 0) += 0.25;
        return value;
      },
      false};
  CHECK_THROWS_AS(reconstruct(corrupted, tol), Error);
}

TEST_SUITE_END();
