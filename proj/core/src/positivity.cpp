#include "posmap/positivity.hpp"

#include <algorithm>
#include <cmath>

#include "posmap/rng.hpp"

namespace posmap {

namespace {

// Bottom eigenpair of the symmetrized matrix.
std::pair<double, Ket> bottom_eigenpair(const Matrix& H) {
  const EigH e = eig_hermitian(H);
  return {e.eigenvalues(0), e.eigenvectors.col(0)};
}

// k x k matrix M with M_ij = <y, block(i,j) y>.
Matrix sandwich_blocks(const LinearMap& phi, const Ket& y) {
  const int k = phi.dim_in();
  Matrix M(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) M(i, j) = y.dot(phi.block(i, j) * y);
  return M;
}

// Compression (I_k (x) V)* J (I_k (x) V), built blockwise.
Matrix compress_second_factor(const Matrix& J, int k, int h, const Matrix& V) {
  const int s = static_cast<int>(V.cols());
  Matrix A(static_cast<Eigen::Index>(k) * s, static_cast<Eigen::Index>(k) * s);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      A.block(i * s, j * s, s, s) = V.adjoint() * J.block(i * h, j * h, h, h) * V;
  return A;
}

// Compression (U (x) I_h)* J (U (x) I_h).
Matrix compress_first_factor(const Matrix& J, int k, int h, const Matrix& U) {
  const int s = static_cast<int>(U.cols());
  Matrix A = Matrix::Zero(static_cast<Eigen::Index>(s) * h, static_cast<Eigen::Index>(s) * h);
  for (int m = 0; m < s; ++m)
    for (int n = 0; n < s; ++n) {
      Matrix acc = Matrix::Zero(h, h);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          const Complex c = std::conj(U(i, m)) * U(j, n);
          if (c != Complex(0, 0)) acc += c * J.block(i * h, j * h, h, h);
        }
      A.block(m * h, n * h, h, h) = acc;
    }
  return A;
}

Ket expand_second_factor(const Ket& t, int k, int h, const Matrix& V) {
  const int s = static_cast<int>(V.cols());
  Ket w = Ket::Zero(static_cast<Eigen::Index>(k) * h);
  for (int i = 0; i < k; ++i) w.segment(i * h, h) = V * t.segment(i * s, s);
  return w;
}

Ket expand_first_factor(const Ket& t, int k, int h, const Matrix& U) {
  const int s = static_cast<int>(U.cols());
  Ket w = Ket::Zero(static_cast<Eigen::Index>(k) * h);
  for (int m = 0; m < s; ++m)
    for (int i = 0; i < k; ++i) w.segment(i * h, h) += U(i, m) * t.segment(m * h, h);
  return w;
}

// Schmidt frames of w reshaped to the k x h coefficient matrix W(i,a) = w(i*h+a).
struct SchmidtData {
  Matrix U;  // first-factor frame (conj(xi) space), orthonormal columns
  Matrix V;  // second-factor frame (y space), orthonormal columns
  std::vector<std::pair<Ket, Ket>> pairs;  // (xi_m, y_m), norms folded into y_m
};

SchmidtData schmidt_split(const Ket& w, int k, int h, int max_cols) {
  Matrix W(k, h);
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < h; ++a) W(i, a) = w(static_cast<Eigen::Index>(i) * h + a);
  Eigen::JacobiSVD<Matrix> svd(W, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  int r = 0;
  for (Eigen::Index m = 0; m < sv.size() && r < max_cols; ++m)
    if (sv(m) > 1e-14) ++r;
  r = std::max(r, 1);
  SchmidtData out;
  // Search frames get the full column budget (the trailing full-SVD columns
  // are an orthonormal completion): a larger subspace can only improve the
  // next exact eigenstep, and any vector in it still has Schmidt rank
  // <= max_cols.
  out.U = svd.matrixU().leftCols(std::min(max_cols, k));
  out.V = svd.matrixV().leftCols(std::min(max_cols, h)).conjugate();
  for (int m = 0; m < r; ++m) {
    Ket xi = canonical_phase(svd.matrixU().col(m).conjugate());
    // Keep xi unit and carry sigma (and the phase correction) on y.
    const Complex align = xi.conjugate().dot(svd.matrixU().col(m));
    out.pairs.emplace_back(xi, Ket(sv(m) * align * svd.matrixV().col(m).conjugate()));
  }
  return out;
}

}  // namespace

double schmidt_witness_value(const LinearMap& phi,
                             const std::vector<std::pair<Ket, Ket>>& witness) {
  if (witness.empty()) return 0.0;
  const int k = phi.dim_in(), h = phi.dim_out();
  const Matrix J = to_choi(phi);
  Ket w = Ket::Zero(static_cast<Eigen::Index>(k) * h);
  for (const auto& [xi, y] : witness)
    for (int i = 0; i < k; ++i) w.segment(i * h, h) += std::conj(xi(i)) * y;
  const double n2 = w.squaredNorm();
  if (n2 == 0.0) return 0.0;
  return std::real(w.dot(J * w)) / n2;
}

OptReport min_product_value(const LinearMap& phi, const ToleranceConfig& tol, int restarts,
                            std::uint64_t seed) {
  const int k = phi.dim_in(), h = phi.dim_out();
  if (k == 0) throw Error(Errc::DimensionMismatch, "min_product_value: empty map");
  if (restarts < 1) throw Error(Errc::BadParams, "min_product_value: restarts >= 1");
  Rng rng(seed);
  // Deterministic starts: the standard basis, then the dominant Schmidt
  // vector of the bottom Choi eigenvector (the best single-product
  // approximation of the unrestricted minimizer), then random.
  Ket spectral_xi;
  {
    Matrix J = to_choi(phi);
    const EigH e = eig_hermitian(J);
    spectral_xi = schmidt_split(e.eigenvectors.col(0), k, h, 1).pairs.front().first;
  }
  OptReport best;
  best.best_value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Ket xi = r < k ? Ket(Ket::Unit(k, r)) : (r == k ? spectral_xi : rng.unit_ket(k));
    Ket y = Ket::Unit(h, 0);
    double value = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int sweep = 0; sweep < std::max(1, tol.max_iters); ++sweep) {
      auto [vy, ynew] = bottom_eigenpair(phi.apply(xi * xi.adjoint()));
      y = ynew;
      // For fixed y the quadratic in xi is d* M d with d = conj(xi) and
      // M_ij = <y, block(i,j) y>.
      auto [vx, d] = bottom_eigenpair(sandwich_blocks(phi, y));
      xi = d.conjugate();
      const double v = std::min(vy, vx);
      if (value - v < tol.opt_tol) {
        value = std::min(value, v);
        converged = true;
        break;
      }
      value = v;
    }
    // Final y for the final xi, then re-evaluate exactly at the witness.
    auto [vy, yfin] = bottom_eigenpair(phi.apply(xi * xi.adjoint()));
    y = yfin;
    xi = canonical_phase(xi);
    y = canonical_phase(y);
    const double v = std::real(y.dot(phi.apply(xi * xi.adjoint()) * y));
    if (v < best.best_value) {
      best.best_value = v;
      best.witness = {{xi, y}};
      best.converged = converged;
    }
  }
  best.restarts_used = restarts;
  return best;
}

OptReport min_schmidt_k_value(const LinearMap& phi, int s, const ToleranceConfig& tol,
                              int restarts, std::uint64_t seed) {
  const int k = phi.dim_in(), h = phi.dim_out();
  if (s < 1 || s > std::min(k, h))
    throw Error(Errc::BadSchmidtRank, "min_schmidt_k_value: need 1 <= s <= min(k,h)");
  if (restarts < 1) throw Error(Errc::BadParams, "min_schmidt_k_value: restarts >= 1");
  Rng rng(seed);
  Matrix J = to_choi(phi);
  J = 0.5 * (J + J.adjoint());

  OptReport best;
  best.best_value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    // y-side frames: the basis columns, then the Schmidt frame of the bottom
    // Choi eigenvector, then random unitary frames.
    Matrix V(h, s);
    if (r == 0) {
      V = Matrix::Identity(h, h).leftCols(s);
    } else if (r == 1) {
      const EigH e = eig_hermitian(J);
      V = schmidt_split(e.eigenvectors.col(0), k, h, s).V;
    } else {
      Eigen::HouseholderQR<Matrix> qr(rng.matrix(h, s));
      V = qr.householderQ() * Matrix::Identity(h, s);
    }
    double value = std::numeric_limits<double>::infinity();
    bool converged = false;
    Ket w;
    for (int sweep = 0; sweep < std::max(1, tol.max_iters); ++sweep) {
      auto [v1, t1] = bottom_eigenpair(compress_second_factor(J, k, h, V));
      w = expand_second_factor(t1, k, h, V);
      SchmidtData sd1 = schmidt_split(w, k, h, s);
      auto [v2, t2] = bottom_eigenpair(compress_first_factor(J, k, h, sd1.U));
      w = expand_first_factor(t2, k, h, sd1.U);
      SchmidtData sd2 = schmidt_split(w, k, h, s);
      V = sd2.V;
      const double v = std::min(v1, v2);
      if (value - v < tol.opt_tol) {
        value = std::min(value, v);
        converged = true;
        break;
      }
      value = v;
    }
    SchmidtData sd = schmidt_split(w / w.norm(), k, h, s);
    const double v = schmidt_witness_value(phi, sd.pairs);
    if (v < best.best_value) {
      best.best_value = v;
      best.witness = sd.pairs;
      best.converged = converged;
    }
  }
  best.restarts_used = restarts;
  return best;
}

CpCheck is_completely_positive(const LinearMap& phi, const ToleranceConfig& tol) {
  const double m = min_eigenvalue(to_choi(phi));
  return CpCheck{m >= -tol.eps_psd, m};
}

CpCheck is_completely_copositive(const LinearMap& phi, const ToleranceConfig& tol) {
  const double m =
      min_eigenvalue(partial_transpose_first(to_choi(phi), phi.dim_in(), phi.dim_out()));
  return CpCheck{m >= -tol.eps_psd, m};
}

SchwarzConfig SchwarzConfig::defaults() {
  SchwarzConfig cfg;
  for (int e = -8; e <= 8; ++e) cfg.gamma_grid.push_back(std::ldexp(1.0, e));
  return cfg;
}

namespace {

SchwarzReport schwarz_generic(const LinearMap& phi, const SchwarzConfig& cfg,
                              const ToleranceConfig& tol, std::uint64_t seed, bool co) {
  if (cfg.gamma_grid.empty()) throw Error(Errc::EmptyGrid, "schwarz: empty gamma grid");
  for (double g : cfg.gamma_grid)
    if (!(g > 0)) throw Error(Errc::BadParams, "schwarz: gamma grid must be strictly positive");
  const int k = phi.dim_in();
  Rng rng(seed);

  std::vector<Matrix> samples;
  samples.push_back(Matrix::Identity(k, k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Matrix E = Matrix::Zero(k, k);
      E(a, b) = 1.0;
      samples.push_back(E);
    }
  for (int n = 0; n < cfg.sample_count; ++n) samples.push_back(rng.contraction(k));

  SchwarzReport report;
  report.gamma_grid = cfg.gamma_grid;
  report.worst_defect.assign(cfg.gamma_grid.size(), std::numeric_limits<double>::infinity());
  for (const Matrix& X : samples) {
    const Matrix lhs = co ? phi.apply(X * X.adjoint()) : phi.apply(X.adjoint() * X);
    const Matrix quad = phi.apply(X.adjoint()) * phi.apply(X);
    for (size_t g = 0; g < cfg.gamma_grid.size(); ++g) {
      const double gamma = cfg.gamma_grid[g];
      const double m = min_eigenvalue(gamma * lhs - gamma * gamma * quad);
      report.worst_defect[g] = std::min(report.worst_defect[g], m);
    }
  }

  size_t best = 0;
  for (size_t g = 1; g < report.worst_defect.size(); ++g)
    if (report.worst_defect[g] > report.worst_defect[best]) best = g;
  if (report.worst_defect[best] >= -tol.eps_psd) report.best_gamma = cfg.gamma_grid[best];
  return report;
}

}  // namespace

SchwarzReport schwarz_defect(const LinearMap& phi, const SchwarzConfig& cfg,
                             const ToleranceConfig& tol, std::uint64_t seed) {
  return schwarz_generic(phi, cfg, tol, seed, false);
}

SchwarzReport schwarz_co_defect(const LinearMap& phi, const SchwarzConfig& cfg,
                                const ToleranceConfig& tol, std::uint64_t seed) {
  return schwarz_generic(phi, cfg, tol, seed, true);
}

}  // namespace posmap
