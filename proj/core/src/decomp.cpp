#include "posmap/decomp.hpp"

#include <cmath>

#include "posmap/rng.hpp"

namespace posmap {

namespace {

Matrix hermitize(const Matrix& M) { return 0.5 * (M + M.adjoint()); }

struct PptProjector {
  int k, h;
  Eigen::Index n;

  // Dykstra among {W >= 0}, {PT1(W) >= 0} and the affine {Tr W = 1}.
  // Corrections are kept for the two cones only.
  Matrix project(const Matrix& W0, double feas_tol, int max_iters) const {
    Matrix W = hermitize(W0);
    Matrix P = Matrix::Zero(n, n), Q = Matrix::Zero(n, n);
    for (int it = 0; it < max_iters; ++it) {
      Matrix T = W + P;
      Matrix Wp = psd_clip(T);
      P = T - Wp;
      T = Wp + Q;
      Matrix Wq = partial_transpose_first(psd_clip(partial_transpose_first(T, k, h)), k, h);
      Q = T - Wq;
      W = Wq + ((1.0 - std::real(Wq.trace())) / static_cast<double>(n)) *
                   Matrix::Identity(n, n);
      const double viol =
          std::max({-min_eigenvalue(W),
                    -min_eigenvalue(partial_transpose_first(W, k, h)),
                    std::abs(std::real(W.trace()) - 1.0)});
      if (viol <= feas_tol) break;
    }
    return hermitize(W);
  }
};

}  // namespace

DecompResult decompose_search(const LinearMap& phi, const ToleranceConfig& tol,
                              int max_iters) {
  const int k = phi.dim_in(), h = phi.dim_out();
  Matrix J = hermitize(to_choi(phi));
  const double resid_tol = 10.0 * tol.eps_eq * std::max(1.0, J.norm());

  auto pt = [&](const Matrix& M) { return partial_transpose_first(M, k, h); };

  // Douglas-Rachford splitting between the affine slice {S1 + PT1(S2) = J}
  // and the product PSD cone. Plain Dykstra cycling creeps when the feasible
  // decomposition is unique (single-Kraus plus single-co-Kraus sums have no
  // Slater point); the reflected iteration handles those in a few hundred
  // steps. The affine projection sends (Z1,Z2) to (Z1+L, Z2+PT1(L)) with
  // L = (J - Z1 - PT1(Z2))/2, PT1 being self-adjoint.
  Matrix Z1 = psd_clip(J);
  Matrix Z2 = psd_clip(pt(J - Z1));

  double best_residual = std::numeric_limits<double>::infinity();
  double prev_residual = best_residual;
  int stall = 0;
  int it = 0;
  for (; it < max_iters; ++it) {
    const Matrix lambda = 0.5 * (J - Z1 - pt(Z2));
    const Matrix A1 = hermitize(Z1 + lambda);
    const Matrix A2 = hermitize(Z2 + pt(lambda));
    const Matrix S1 = psd_clip(A1);
    const Matrix S2 = psd_clip(A2);
    const double residual = (J - S1 - pt(S2)).norm();
    best_residual = std::min(best_residual, residual);
    if (residual <= resid_tol) {
      DecompResult out;
      out.kind = DecompResult::Kind::Decomposed;
      out.S1 = S1;
      out.S2 = S2;
      out.residual = residual;
      out.iterations = it + 1;
      return out;
    }
    Z1 += psd_clip(2.0 * A1 - Z1) - A1;
    Z2 += psd_clip(2.0 * A2 - Z2) - A2;

    if (std::abs(prev_residual - residual) < 1e-14 * std::max(1.0, residual)) {
      if (++stall >= 50) break;
    } else {
      stall = 0;
    }
    prev_residual = residual;
  }

  DecompResult out;
  out.kind = DecompResult::Kind::Inconclusive;
  out.iterations = it;
  out.best_residual = best_residual;
  return out;
}

DecompResult ppt_witness_search(const LinearMap& phi, const ToleranceConfig& tol,
                                int restarts, int max_iters, std::uint64_t seed) {
  const int k = phi.dim_in(), h = phi.dim_out();
  const Matrix J = hermitize(to_choi(phi));
  const Eigen::Index n = J.rows();
  const PptProjector proj{k, h, n};
  Rng rng(seed);

  const EigH je = eig_hermitian(J);
  const double L = std::max({std::abs(je.eigenvalues(0)), std::abs(je.eigenvalues(n - 1)), 1e-12});
  const double step = 1.0 / L;
  const double witness_tol = std::max(100.0 * tol.eps_psd, 1e-6);

  Matrix best_W;
  double best_value = std::numeric_limits<double>::infinity();
  int total_iters = 0;

  for (int r = 0; r < std::max(1, restarts); ++r) {
    Matrix W = r == 0 ? Matrix(Matrix::Identity(n, n) / static_cast<double>(n))
                      : proj.project(rng.psd(static_cast<int>(n)), 1e-11, 300);
    double last_best = std::numeric_limits<double>::infinity();
    int flat = 0;
    for (int it = 0; it < max_iters; ++it, ++total_iters) {
      W = proj.project(W - step * J, 1e-11, 200);
      const double v = std::real((J * W).trace());
      if (v < best_value) {
        best_value = v;
        best_W = W;
      }
      if (last_best - v < 1e-12 * std::max(1.0, std::abs(v))) {
        if (++flat >= 40) break;
      } else {
        flat = 0;
      }
      last_best = std::min(last_best, v);
    }
    if (best_value < -witness_tol * 4.0) break;  // clearly negative already
  }

  DecompResult out;
  out.iterations = total_iters;
  if (best_W.size() == 0) {
    out.kind = DecompResult::Kind::Inconclusive;
    out.best_witness_value = best_value;
    return out;
  }

  // Verification pass at tightened feasibility.
  Matrix W = proj.project(best_W, 1e-13, 3000);
  const double value = std::real((J * W).trace());
  const double w_min = min_eigenvalue(W);
  const double wt_min = min_eigenvalue(partial_transpose_first(W, k, h));
  const double tight = tol.eps_psd / 10.0;
  if (value < -witness_tol && w_min >= -tight && wt_min >= -tight &&
      std::abs(std::real(W.trace()) - 1.0) <= tight) {
    out.kind = DecompResult::Kind::WitnessFound;
    out.W = W;
    out.value = value;
    return out;
  }
  out.kind = DecompResult::Kind::Inconclusive;
  out.best_witness_value = value;
  return out;
}

}  // namespace posmap
