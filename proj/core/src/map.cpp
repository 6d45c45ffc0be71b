#include "posmap/map.hpp"

namespace posmap {

LinearMap::LinearMap(int dim_in, int dim_out) : k_(dim_in), h_(dim_out) {
  if (dim_in < 1 || dim_out < 1)
    throw Error(Errc::DimensionMismatch, "LinearMap dimensions must be positive");
  blocks_.assign(static_cast<size_t>(k_) * k_, Matrix::Zero(h_, h_));
}

LinearMap LinearMap::identity(int dim) { return from_kraus(Matrix::Identity(dim, dim)); }

Matrix LinearMap::apply(const Matrix& X) const {
  if (X.rows() != k_ || X.cols() != k_)
    throw Error(Errc::DimensionMismatch, "apply: X must be dim_in x dim_in");
  Matrix out = Matrix::Zero(h_, h_);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) {
      const Complex c = X(i, j);
      if (c != Complex(0, 0)) out += c * block(i, j);
    }
  return out;
}

bool LinearMap::is_zero(double tol) const {
  for (const Matrix& b : blocks_)
    if (b.norm() > tol) return false;
  return true;
}

LinearMap from_kraus(const Matrix& B) {
  const int h = static_cast<int>(B.rows());
  const int k = static_cast<int>(B.cols());
  LinearMap phi(k, h);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) phi.block(i, j) = B.col(i) * B.col(j).adjoint();
  return phi;
}

LinearMap from_cokraus(const Matrix& C) {
  const int h = static_cast<int>(C.rows());
  const int k = static_cast<int>(C.cols());
  // E_ij^T = E_ji, so block(i,j) = C E_ji C*.
  LinearMap phi(k, h);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) phi.block(i, j) = C.col(j) * C.col(i).adjoint();
  return phi;
}

LinearMap from_functional(const Matrix& M, const Matrix& Q, const ToleranceConfig& tol) {
  if (M.rows() != M.cols()) throw Error(Errc::NonSquare, "from_functional: M must be square");
  if (Q.rows() != Q.cols()) throw Error(Errc::NonSquare, "from_functional: Q must be square");
  if (!is_psd(M, tol).psd) throw Error(Errc::NotPSD, "from_functional: M is not PSD");
  const double scale = std::max(1.0, Q.norm());
  if ((Q - Q.adjoint()).norm() > tol.eps_eq * scale || (Q * Q - Q).norm() > tol.eps_eq * scale ||
      std::abs(Q.trace() - Complex(1, 0)) > tol.eps_eq * scale)
    throw Error(Errc::NotProjection, "from_functional: Q is not a rank-1 projection");
  const int k = static_cast<int>(M.rows());
  const int h = static_cast<int>(Q.rows());
  LinearMap phi(k, h);
  // Tr(M E_ij) = M_ji.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) phi.block(i, j) = M(j, i) * Q;
  return phi;
}

LinearMap choi_example() {
  LinearMap phi(3, 3);
  phi.block(0, 0) = Eigen::Vector3cd(1, 1, 0).asDiagonal();
  phi.block(1, 1) = Eigen::Vector3cd(0, 1, 1).asDiagonal();
  phi.block(2, 2) = Eigen::Vector3cd(1, 0, 1).asDiagonal();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        Matrix b = Matrix::Zero(3, 3);
        b(i, j) = Complex(-1, 0);
        phi.block(i, j) = b;
      }
  return phi;
}

LinearMap scale_add(double a, const LinearMap& phi, double b, const LinearMap& rho) {
  if (phi.dim_in() != rho.dim_in() || phi.dim_out() != rho.dim_out())
    throw Error(Errc::DimensionMismatch, "scale_add: map dimensions differ");
  LinearMap out(phi.dim_in(), phi.dim_out());
  for (int i = 0; i < phi.dim_in(); ++i)
    for (int j = 0; j < phi.dim_in(); ++j)
      out.block(i, j) = a * phi.block(i, j) + b * rho.block(i, j);
  return out;
}

Matrix to_choi(const LinearMap& phi) {
  const int k = phi.dim_in(), h = phi.dim_out();
  Matrix J = Matrix::Zero(static_cast<Eigen::Index>(k) * h, static_cast<Eigen::Index>(k) * h);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) J.block(i * h, j * h, h, h) = phi.block(i, j);
  return J;
}

LinearMap from_choi(const Matrix& J, int k, int h) {
  if (J.rows() != static_cast<Eigen::Index>(k) * h || J.cols() != J.rows())
    throw Error(Errc::DimensionMismatch, "from_choi: J must be (k*h) x (k*h)");
  LinearMap phi(k, h);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) phi.block(i, j) = J.block(i * h, j * h, h, h);
  return phi;
}

LinearMap precompose_transpose(const LinearMap& phi) {
  return from_choi(partial_transpose_first(to_choi(phi), phi.dim_in(), phi.dim_out()),
                   phi.dim_in(), phi.dim_out());
}

double map_norm(const LinearMap& phi) { return to_choi(phi).norm(); }

double map_distance(const LinearMap& phi, const LinearMap& rho) {
  if (phi.dim_in() != rho.dim_in() || phi.dim_out() != rho.dim_out())
    throw Error(Errc::DimensionMismatch, "map_distance: map dimensions differ");
  return (to_choi(phi) - to_choi(rho)).norm();
}

bool is_hermiticity_preserving(const LinearMap& phi, double tol) {
  for (int i = 0; i < phi.dim_in(); ++i)
    for (int j = i; j < phi.dim_in(); ++j)
      if ((phi.block(j, i) - phi.block(i, j).adjoint()).norm() > tol) return false;
  return true;
}

}  // namespace posmap
