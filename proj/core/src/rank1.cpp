#include "posmap/rank1.hpp"

#include <cmath>

#include "posmap/minorant.hpp"
#include "posmap/rng.hpp"

namespace posmap {

namespace {

constexpr int kDefaultProfileSamples = 64;

Matrix lemma_matrix(const Ket& x, const Ket& y, const Matrix& A, Complex lambda) {
  return x * x.adjoint() + std::norm(lambda) * (y * y.adjoint()) + lambda * A +
         std::conj(lambda) * A.adjoint();
}

}  // namespace

RankScan lemma_rank_scan(const Ket& x, const Ket& y, const Matrix& A, int lambda_samples,
                         const ToleranceConfig& tol, std::uint64_t seed) {
  if (A.rows() != A.cols()) throw Error(Errc::NonSquare, "lemma_rank_scan: A must be square");
  if (A.rows() != x.size() || A.rows() != y.size())
    throw Error(Errc::DimensionMismatch, "lemma_rank_scan: dimension mismatch");
  RankScan scan{true, Complex(0, 0), 0};
  auto visit = [&](Complex lambda) {
    const int r = numerical_rank(lemma_matrix(x, y, A, lambda), tol);
    if (r > scan.worst_rank) {
      scan.worst_rank = r;
      scan.worst_lambda = lambda;
    }
  };
  static const double radii[] = {0.25, 0.5, 1.0, 2.0, 4.0};
  for (double r : radii)
    for (int t = 0; t < 32; ++t) {
      const double theta = 2.0 * M_PI * t / 32.0;
      visit(Complex(r * std::cos(theta), r * std::sin(theta)));
    }
  Rng rng(seed);
  for (int n = 0; n < lambda_samples; ++n) {
    const double r = 0.25 * std::pow(16.0, rng.uniform());
    const double theta = 2.0 * M_PI * rng.uniform();
    visit(Complex(r * std::cos(theta), r * std::sin(theta)));
  }
  scan.all_rank_le_1 = scan.worst_rank <= 1;
  return scan;
}

LemmaCase lemma_classify(const Ket& x, const Ket& y, const Matrix& A,
                         const ToleranceConfig& tol) {
  const double a_norm = A.norm();
  const double fit_tol = std::max(tol.eps_eq, 1e-12) * std::max(1.0, a_norm);

  Matrix pair(x.size(), 2);
  pair.col(0) = x;
  pair.col(1) = y;
  const double xn = x.norm(), yn = y.norm();
  const double vec_scale = std::max(xn, yn);
  const int pair_rank = vec_scale <= 1e-14 ? 0 : numerical_rank(pair, tol);

  if (pair_rank == 0) {
    // x = y = 0: admissible A are complex multiples of 1-dim projections.
    LemmaCase c;
    c.kind = LemmaCase::Kind::BothZero;
    if (a_norm <= fit_tol) {
      c.mu = 0.0;
      return c;
    }
    Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Ket u = svd.matrixU().col(0);
    const Ket v = svd.matrixV().col(0);
    const Complex scale = svd.singularValues()(0) * v.dot(u);
    if ((A - scale * u * u.adjoint()).norm() <= fit_tol) {
      c.mu = scale;
      return c;
    }
  } else if (pair_rank == 1) {
    if (xn > 1e-14) {
      const Complex mu = x.dot(A * x) / (xn * xn * xn * xn);
      if ((A - mu * x * x.adjoint()).norm() <= fit_tol)
        return LemmaCase{LemmaCase::Kind::DepX, mu, LemmaCase::Orientation::XYStar, 0, 0};
    }
    if (yn > 1e-14) {
      const Complex mu = y.dot(A * y) / (yn * yn * yn * yn);
      if ((A - mu * y * y.adjoint()).norm() <= fit_tol)
        return LemmaCase{LemmaCase::Kind::DepY, mu, LemmaCase::Orientation::XYStar, 0, 0};
    }
  } else {
    const double denom = xn * xn * yn * yn;
    const Complex mu_xy = x.dot(A * y) / denom;
    if ((A - mu_xy * x * y.adjoint()).norm() <= fit_tol &&
        std::abs(std::abs(mu_xy) - 1.0) <= std::max(tol.eps_eq, 1e-10)) {
      return LemmaCase{LemmaCase::Kind::IndepXY, mu_xy, LemmaCase::Orientation::XYStar, 0, 0};
    }
    const Complex mu_yx = y.dot(A * x) / denom;
    if ((A - mu_yx * y * x.adjoint()).norm() <= fit_tol &&
        std::abs(std::abs(mu_yx) - 1.0) <= std::max(tol.eps_eq, 1e-10)) {
      return LemmaCase{LemmaCase::Kind::IndepXY, mu_yx, LemmaCase::Orientation::YXStar, 0, 0};
    }
  }

  LemmaCase c;
  c.kind = LemmaCase::Kind::NoCase;
  const RankScan scan = lemma_rank_scan(x, y, A, 64, tol);
  c.witness_lambda = scan.worst_lambda;
  c.witness_rank = scan.worst_rank;
  return c;
}

RankProfile rank_profile(const LinearMap& phi, int samples, const ToleranceConfig& tol,
                         std::uint64_t seed) {
  if (samples < 1) throw Error(Errc::BadParams, "rank_profile: samples >= 1 required");
  RankProfile profile;
  auto visit = [&](const Ket& xi, bool structured) {
    const int r = numerical_rank(phi.apply(xi * xi.adjoint()), tol);
    if (structured) profile.per_basis.emplace_back(xi, r);
    if (r > profile.max_rank) {
      profile.max_rank = r;
      profile.witness = xi;
    }
  };
  for (const Ket& xi : scan_unit_vectors(phi.dim_in())) visit(xi, true);
  Rng rng(seed);
  for (int n = 0; n < samples; ++n) visit(rng.unit_ket(phi.dim_in()), false);
  return profile;
}

double phase_aligned_distance(const Matrix& A, const Matrix& B) {
  const Complex z = (A.adjoint() * B).trace();
  const Complex phase = std::abs(z) > 1e-300 ? z / std::abs(z) : Complex(1, 0);
  return (phase * A - B).norm();
}

MapClass classify_rank1(const LinearMap& phi, const ToleranceConfig& tol) {
  const int k = phi.dim_in(), h = phi.dim_out();

  if (phi.is_zero(0.0)) {
    MapClass out;
    out.kind = MapClass::Kind::Kraus;
    out.B = Matrix::Zero(h, k);
    return out;
  }

  // (1) Rank scan: the first vector whose image has rank >= 2 is the witness.
  {
    Rng rng(0);
    std::vector<Ket> scan = scan_unit_vectors(k);
    for (int n = 0; n < kDefaultProfileSamples; ++n) scan.push_back(rng.unit_ket(k));
    for (const Ket& xi : scan) {
      const int r = numerical_rank(phi.apply(xi * xi.adjoint()), tol);
      if (r >= 2) {
        MapClass out;
        out.kind = MapClass::Kind::NotRankOne;
        out.witness = xi * xi.adjoint();
        out.observed_rank = r;
        return out;
      }
    }
  }

  const double map_tol = std::max(tol.eps_eq, 1e-12) * std::max(1.0, map_norm(phi));
  const MinorantSeed seed = find_seed(phi, tol);

  // (2) Kraus candidate from (the columns of) B eta = l^{-1/2} phi(eta xi*) x.
  {
    const Matrix B = build_B(phi, seed, tol);
    const double dist = map_distance(from_kraus(B), phi);
    if (dist <= map_tol) {
      MapClass out;
      out.kind = MapClass::Kind::Kraus;
      out.B = B;
      out.residual = dist;
      return out;
    }
  }

  // (3) Co-Kraus candidate.
  {
    const Matrix C = build_C(phi, seed, tol);
    const double dist = map_distance(from_cokraus(C), phi);
    if (dist <= map_tol) {
      MapClass out;
      out.kind = MapClass::Kind::CoKraus;
      out.C = C;
      out.residual = dist;
      return out;
    }
  }

  // (4) Functional fit: Q spans the common range of the phi(E_ii); then
  // M_ji = Tr(Q phi(E_ij)).
  {
    Matrix sum = Matrix::Zero(h, h);
    for (int i = 0; i < k; ++i) sum += phi.block(i, i);
    const EigH e = eig_hermitian(sum);
    const Ket q = canonical_phase(e.eigenvectors.col(h - 1));
    const Matrix Q = q * q.adjoint();
    Matrix M(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) M(j, i) = (Q * phi.block(i, j)).trace();
    M = 0.5 * (M + M.adjoint());
    try {
      const double dist = map_distance(from_functional(M, Q, tol), phi);
      if (dist <= map_tol) {
        MapClass out;
        out.kind = MapClass::Kind::Functional;
        out.M = M;
        out.Q = Q;
        out.residual = dist;
        return out;
      }
    } catch (const Error&) {
      // fall through: M not PSD means the functional form cannot hold
    }
  }

  // (5) No branch verified: numerically inconsistent input; report the best
  // witness we have.
  MapClass out;
  out.kind = MapClass::Kind::NotRankOne;
  const RankProfile profile = rank_profile(phi, kDefaultProfileSamples, tol);
  out.witness = profile.witness * profile.witness.adjoint();
  out.observed_rank = profile.max_rank;
  out.residual = std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace posmap
