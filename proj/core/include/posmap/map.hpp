#ifndef POSMAP_MAP_HPP
#define POSMAP_MAP_HPP

#include <vector>

#include "posmap/linalg.hpp"

namespace posmap {

/// Linear map B(C^k) -> B(C^h) stored as the k x k grid of Choi blocks
/// phi(E_ij). Immutable in normal use: build through the named constructors.
class LinearMap {
 public:
  LinearMap() = default;

  /// Zero map of the given dimensions.
  LinearMap(int dim_in, int dim_out);

  static LinearMap identity(int dim);

  int dim_in() const { return k_; }
  int dim_out() const { return h_; }

  const Matrix& block(int i, int j) const { return blocks_[static_cast<size_t>(i) * k_ + j]; }
  Matrix& block(int i, int j) { return blocks_[static_cast<size_t>(i) * k_ + j]; }

  /// phi(X) = sum_ij X_ij * block(i,j).
  Matrix apply(const Matrix& X) const;

  bool is_zero(double tol = 0.0) const;

 private:
  int k_ = 0, h_ = 0;
  std::vector<Matrix> blocks_;
};

/// phi(X) = B X B*.
LinearMap from_kraus(const Matrix& B);

/// phi(X) = C X^T C*.
LinearMap from_cokraus(const Matrix& C);

/// phi(X) = Tr(M X) Q for PSD M and a rank-1 projection Q.
/// Throws NotPSD / NotProjection.
LinearMap from_functional(const Matrix& M, const Matrix& Q, const ToleranceConfig& tol);

/// The 3x3 example map: diagonal outputs (a11+a33, a22+a11, a33+a22),
/// off-diagonal outputs -a_ij. Positive, nondecomposable, extremal.
LinearMap choi_example();

/// Blockwise a*phi + b*rho.
LinearMap scale_add(double a, const LinearMap& phi, double b, const LinearMap& rho);

/// Choi matrix J = sum_ij E_ij (x) block(i,j), with the input index on the
/// first tensor factor. phi CP <=> J PSD; phi co-CP <=> PT1(J) PSD.
Matrix to_choi(const LinearMap& phi);

LinearMap from_choi(const Matrix& J, int k, int h);

/// The map X -> phi(X^T); its Choi matrix is PT1(to_choi(phi)).
LinearMap precompose_transpose(const LinearMap& phi);

/// Frobenius norm of the Choi matrix.
double map_norm(const LinearMap& phi);

double map_distance(const LinearMap& phi, const LinearMap& rho);

/// block(j,i) == block(i,j)* within tol on every pair.
bool is_hermiticity_preserving(const LinearMap& phi, double tol);

}  // namespace posmap

#endif
