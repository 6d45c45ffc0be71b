#ifndef POSMAP_LINALG_HPP
#define POSMAP_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "posmap/error.hpp"
#include "posmap/tolerances.hpp"

namespace posmap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Result of a Hermitian eigendecomposition: eigenvalues ascending,
/// eigenvector i in column i, columns orthonormal.
struct EigH {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

/// Eigendecomposition of (H + H*)/2. Throws NonSquare / NonFinite.
EigH eig_hermitian(const Matrix& H);

struct PsdCheck {
  bool psd;
  double min_eig;
};

/// PSD test: min eigenvalue of the symmetrized input against -eps_psd.
PsdCheck is_psd(const Matrix& H, const ToleranceConfig& tol);

/// Number of singular values above eps_rank * (largest singular value);
/// 0 for the zero matrix.
int numerical_rank(const Matrix& M, const ToleranceConfig& tol);

/// Outer product xi eta*: entry (a,b) = xi_a * conj(eta_b).
Matrix outer(const Ket& xi, const Ket& eta);

/// Transpose with respect to the fixed involution (entrywise conjugation in
/// the standard basis), which reduces to the plain matrix transpose.
Matrix transpose_inv(const Matrix& X);

/// Block transpose on the first tensor factor: J is a k x k grid of h x h
/// blocks; output block (i,j) = input block (j,i).
Matrix partial_transpose_first(const Matrix& J, int k, int h);

/// Smallest eigenvalue of the symmetrized matrix.
double min_eigenvalue(const Matrix& H);

/// Projection onto the PSD cone (eigenvalue clipping of the symmetrized input).
Matrix psd_clip(const Matrix& H);

/// Multiplies v by a unit phase so that its largest-magnitude entry (lowest
/// index among near-ties) becomes real nonnegative. Identity on zero vectors.
Ket canonical_phase(const Ket& v);

/// Deterministic Householder completion of the unit vector x: an h x (h-1)
/// matrix with orthonormal columns spanning the orthocomplement of x.
Matrix orthonormal_complement(const Ket& x);

/// The deterministic structured scan family: all standard basis vectors,
/// then (e_i +- e_j)/sqrt(2) and (e_i +- i e_j)/sqrt(2) for i < j.
std::vector<Ket> scan_unit_vectors(int dim);

bool all_finite(const Matrix& M);

}  // namespace posmap

#endif
