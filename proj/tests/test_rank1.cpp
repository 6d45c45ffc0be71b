#include "doctest.h"
#include "helpers.hpp"
#include "posmap/rank1.hpp"

using namespace posmap;
using namespace posmap::testing;

namespace {

const ToleranceConfig tol;

// Constructors for the four admissible lemma forms.
Matrix make_indep(Rng& rng, int dim, Ket& x, Ket& y) {
  x = rng.ket(dim);
  do y = rng.ket(dim);
  while (numerical_rank((Matrix(dim, 2) << x, y).finished(), tol) < 2);
  const double t = 2.0 * M_PI * rng.uniform();
  const Complex mu(std::cos(t), std::sin(t));
  return rng.uniform() < 0.5 ? Matrix(mu * outer(x, y)) : Matrix(mu * outer(y, x));
}

Matrix make_depx(Rng& rng, int dim, Ket& x, Ket& y) {
  x = rng.ket(dim);
  y = rng.cgaussian() * x;
  return rng.cgaussian() * outer(x, x);
}

Matrix make_depy(Rng& rng, int dim, Ket& x, Ket& y) {
  y = rng.ket(dim);
  x = rng.cgaussian() * y;
  return rng.cgaussian() * outer(y, y);
}

Matrix make_bothzero(Rng& rng, int dim, Ket& x, Ket& y) {
  x = Ket::Zero(dim);
  y = Ket::Zero(dim);
  const Ket p = rng.unit_ket(dim);
  return rng.cgaussian() * outer(p, p);
}

}  // namespace

TEST_SUITE_BEGIN("rank1");

TEST_CASE("lemma_rank_scan: hand-built cases") {
  Ket x = Ket::Unit(3, 0), y = Ket::Unit(3, 1);
  CHECK(lemma_rank_scan(x, y, outer(x, y), 32, tol).all_rank_le_1);

  const RankScan bad = lemma_rank_scan(Ket::Zero(2), Ket::Zero(2),
                                       Matrix::Identity(2, 2), 32, tol);
  CHECK_FALSE(bad.all_rank_le_1);
  CHECK(bad.worst_rank == 2);

  Rng rng(151);
  y = rng.ket(3);
  x = 2.0 * y;
  const Complex mu = rng.cgaussian();
  CHECK(lemma_rank_scan(x, y, Matrix(mu * outer(y, y)), 32, tol).all_rank_le_1);

  CHECK_THROWS_AS(lemma_rank_scan(x, y, Matrix::Zero(2, 2), 4, tol), Error);
}

TEST_CASE("lemma_classify: worked examples") {
  Rng rng(157);
  Ket x = rng.ket(3), y = rng.ket(3);
  const Complex mu(std::cos(M_PI / 3), std::sin(M_PI / 3));
  LemmaCase c = lemma_classify(x, y, Matrix(mu * outer(x, y)), tol);
  REQUIRE(c.kind == LemmaCase::Kind::IndepXY);
  CHECK(c.orientation == LemmaCase::Orientation::XYStar);
  CHECK(std::abs(c.mu - mu) < 1e-10);

  x = rng.ket(3);
  c = lemma_classify(x, Ket(3.0 * x), Matrix(2.5 * outer(x, x)), tol);
  REQUIRE(c.kind == LemmaCase::Kind::DepX);
  CHECK(std::abs(c.mu - Complex(2.5, 0)) < 1e-10);

  // E12 is rank one but not a multiple of a projection.
  Matrix E12 = Matrix::Zero(2, 2);
  E12(0, 1) = 1;
  c = lemma_classify(Ket::Zero(2), Ket::Zero(2), E12, tol);
  REQUIRE(c.kind == LemmaCase::Kind::NoCase);
  CHECK(c.witness_rank >= 2);
}

TEST_CASE("lemma oracle: constructed forms pass the scan and round-trip") {
  Rng rng(163);
  using Maker = Matrix (*)(Rng&, int, Ket&, Ket&);
  const Maker makers[] = {make_indep, make_depx, make_depy, make_bothzero};
  const LemmaCase::Kind kinds[] = {LemmaCase::Kind::IndepXY, LemmaCase::Kind::DepX,
                                   LemmaCase::Kind::DepY, LemmaCase::Kind::BothZero};
  for (int which = 0; which < 4; ++which) {
    for (int n = 0; n < 100; ++n) {
      const int dim = 2 + static_cast<int>(rng.uniform() * 3);
      Ket x, y;
      const Matrix A = makers[which](rng, dim, x, y);
      REQUIRE(lemma_rank_scan(x, y, A, 16, tol, n).all_rank_le_1);
      const LemmaCase c = lemma_classify(x, y, A, tol);
      // DepX/DepY overlap when both vectors are nonzero; accept either.
      if (kinds[which] == LemmaCase::Kind::DepY && c.kind == LemmaCase::Kind::DepX) continue;
      REQUIRE(c.kind == kinds[which]);
    }
  }
}

TEST_CASE("lemma oracle: rejected forms produce rank witnesses") {
  Rng rng(167);
  int rejected = 0;
  while (rejected < 100) {
    const int dim = 2 + static_cast<int>(rng.uniform() * 3);
    const Ket x = rng.ket(dim), y = rng.ket(dim);
    const Matrix A = rng.matrix(dim, dim);
    const LemmaCase c = lemma_classify(x, y, A, tol);
    if (c.kind != LemmaCase::Kind::NoCase) continue;
    ++rejected;
    REQUIRE(c.witness_rank >= 2);
    const Matrix R = outer(x, x) + std::norm(c.witness_lambda) * outer(y, y) +
                     c.witness_lambda * A + std::conj(c.witness_lambda) * A.adjoint();
    REQUIRE(numerical_rank(R, tol) >= 2);
  }
}

TEST_CASE("rank_profile") {
  Rng rng(173);
  CHECK(rank_profile(from_kraus(rng.matrix(3, 3)), 64, tol).max_rank <= 1);

  const RankProfile choi = rank_profile(choi_example(), 64, tol);
  CHECK(choi.max_rank == 3);
  // First structured vector is e1 and the example map sends E11 to rank 2.
  CHECK((choi.per_basis.front().first - Ket::Unit(3, 0)).norm() == 0.0);
  CHECK(choi.per_basis.front().second == 2);

  Matrix M = rng.psd(3) + Matrix::Identity(3, 3);
  const Ket q = rng.unit_ket(2);
  CHECK(rank_profile(from_functional(M, outer(q, q), tol), 64, tol).max_rank == 1);
}

TEST_CASE("classify_rank1: Kraus and co-Kraus recovery with phase alignment") {
  Rng rng(179);
  for (int n = 0; n < 30; ++n) {
    const int k = 2 + n % 3, h = 2 + (n / 3) % 3;
    const Matrix A = rng.matrix(h, k);
    const MapClass kc = classify_rank1(from_kraus(A), tol);
    REQUIRE(kc.kind == MapClass::Kind::Kraus);
    REQUIRE(phase_aligned_distance(kc.B, A) <= 1e-8 * std::max(1.0, A.norm()));

    const Matrix C = rng.matrix(h, k);
    const MapClass cc = classify_rank1(from_cokraus(C), tol);
    REQUIRE(cc.kind == MapClass::Kind::CoKraus);
    REQUIRE(phase_aligned_distance(cc.C, C) <= 1e-8 * std::max(1.0, C.norm()));
  }
}

TEST_CASE("classify_rank1: example map yields the E11 witness") {
  const MapClass c = classify_rank1(choi_example(), tol);
  REQUIRE(c.kind == MapClass::Kind::NotRankOne);
  Matrix E11 = Matrix::Zero(3, 3);
  E11(0, 0) = 1;
  CHECK((c.witness - E11).norm() < 1e-12);
  CHECK(c.observed_rank == 2);
}

TEST_CASE("classify_rank1: functional maps") {
  Rng rng(181);
  // Pure functional: simultaneously Kraus; the Kraus branch fires first.
  const Ket eta = rng.ket(3), x = rng.unit_ket(2);
  const LinearMap pure = from_functional(outer(eta, eta), outer(x, x), tol);
  const MapClass pc = classify_rank1(pure, tol);
  REQUIRE(pc.kind == MapClass::Kind::Kraus);
  CHECK(phase_aligned_distance(pc.B, Matrix(x * eta.adjoint())) < 1e-8);

  // Full-rank M is neither Kraus nor co-Kraus.
  const Matrix M = rng.psd(3) + Matrix::Identity(3, 3);
  const LinearMap gen = from_functional(M, outer(x, x), tol);
  const MapClass gc = classify_rank1(gen, tol);
  REQUIRE(gc.kind == MapClass::Kind::Functional);
  CHECK((gc.M - M).norm() < 1e-8 * M.norm());
  CHECK((gc.Q - outer(x, x)).norm() < 1e-8);

  const MapClass zc = classify_rank1(LinearMap(3, 2), tol);
  REQUIRE(zc.kind == MapClass::Kind::Kraus);
  CHECK(zc.B.norm() == 0.0);
}

TEST_CASE("classify_rank1 soundness: accepted branches rebuild the map") {
  Rng rng(191);
  for (int n = 0; n < 40; ++n) {
    const int k = 2 + n % 3, h = 2 + (n / 2) % 3;
    LinearMap phi;
    switch (n % 3) {
      case 0: phi = from_kraus(rng.matrix(h, k)); break;
      case 1: phi = from_cokraus(rng.matrix(h, k)); break;
      default: {
        const Ket q = rng.unit_ket(h);
        phi = from_functional(rng.psd(k) + Matrix::Identity(k, k), outer(q, q), tol);
        break;
      }
    }
    const MapClass c = classify_rank1(phi, tol);
    LinearMap rebuilt;
    switch (c.kind) {
      case MapClass::Kind::Kraus: rebuilt = from_kraus(c.B); break;
      case MapClass::Kind::CoKraus: rebuilt = from_cokraus(c.C); break;
      case MapClass::Kind::Functional: rebuilt = from_functional(c.M, c.Q, tol); break;
      default: REQUIRE(false);
    }
    REQUIRE(map_distance(rebuilt, phi) <= 1e-8 * std::max(1.0, map_norm(phi)));
    // Decomposable-extremal regression: these maps never exceed rank 1.
    REQUIRE(rank_profile(phi, 32, tol).max_rank <= 1);
  }
}

TEST_SUITE_END();
