#include "posmap/linalg.hpp"

#include <cmath>

namespace posmap {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonFinite: return "NonFinite";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotPSD: return "NotPSD";
    case Errc::NotProjection: return "NotProjection";
    case Errc::NotUnit: return "NotUnit";
    case Errc::BadSchmidtRank: return "BadSchmidtRank";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::ZeroMap: return "ZeroMap";
    case Errc::InvalidSeed: return "InvalidSeed";
    case Errc::MethodUnavailable: return "MethodUnavailable";
    case Errc::NotInFace: return "NotInFace";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::BadParams: return "BadParams";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

bool all_finite(const Matrix& M) {
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      if (!std::isfinite(M(i, j).real()) || !std::isfinite(M(i, j).imag())) return false;
  return true;
}

EigH eig_hermitian(const Matrix& H) {
  if (H.rows() != H.cols()) throw Error(Errc::NonSquare, "eig_hermitian needs a square matrix");
  if (!all_finite(H)) throw Error(Errc::NonFinite, "eig_hermitian input has NaN/Inf entries");
  const Matrix sym = 0.5 * (H + H.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  return EigH{solver.eigenvalues(), solver.eigenvectors()};
}

PsdCheck is_psd(const Matrix& H, const ToleranceConfig& tol) {
  const EigH e = eig_hermitian(H);
  const double min_eig = e.eigenvalues.size() > 0 ? e.eigenvalues(0) : 0.0;
  return PsdCheck{min_eig >= -tol.eps_psd, min_eig};
}

int numerical_rank(const Matrix& M, const ToleranceConfig& tol) {
  if (M.size() == 0) return 0;
  const Eigen::JacobiSVD<Matrix> svd(M);
  const RealVector& sv = svd.singularValues();
  const double top = sv(0);
  if (top == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol.eps_rank * top) ++rank;
  return rank;
}

Matrix outer(const Ket& xi, const Ket& eta) { return xi * eta.adjoint(); }

Matrix transpose_inv(const Matrix& X) {
  if (X.rows() != X.cols()) throw Error(Errc::NonSquare, "transpose_inv needs a square matrix");
  return X.transpose();
}

Matrix partial_transpose_first(const Matrix& J, int k, int h) {
  if (J.rows() != static_cast<Eigen::Index>(k) * h || J.cols() != J.rows())
    throw Error(Errc::DimensionMismatch, "partial_transpose_first: J must be (k*h) x (k*h)");
  Matrix out(J.rows(), J.cols());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.block(i * h, j * h, h, h) = J.block(j * h, i * h, h, h);
  return out;
}

double min_eigenvalue(const Matrix& H) {
  const EigH e = eig_hermitian(H);
  return e.eigenvalues.size() > 0 ? e.eigenvalues(0) : 0.0;
}

Matrix psd_clip(const Matrix& H) {
  const EigH e = eig_hermitian(H);
  RealVector clipped = e.eigenvalues.cwiseMax(0.0);
  return e.eigenvectors * clipped.asDiagonal() * e.eigenvectors.adjoint();
}

Ket canonical_phase(const Ket& v) {
  double best = 0.0;
  Eigen::Index pivot = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > best * (1.0 + 1e-12)) {
      best = m;
      pivot = i;
    }
  }
  if (pivot < 0 || best == 0.0) return v;
  const Complex phase = std::conj(v(pivot)) / best;
  return v * phase;
}

std::vector<Ket> scan_unit_vectors(int dim) {
  std::vector<Ket> out;
  for (int i = 0; i < dim; ++i) out.push_back(Ket::Unit(dim, i));
  const double s = M_SQRT1_2;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      out.push_back(s * (Ket::Unit(dim, i) + Ket::Unit(dim, j)));
      out.push_back(s * (Ket::Unit(dim, i) - Ket::Unit(dim, j)));
      out.push_back(s * (Ket::Unit(dim, i) + Complex(0, 1) * Ket::Unit(dim, j)));
      out.push_back(s * (Ket::Unit(dim, i) - Complex(0, 1) * Ket::Unit(dim, j)));
    }
  return out;
}

Matrix orthonormal_complement(const Ket& x) {
  const Eigen::Index h = x.size();
  if (h < 1) throw Error(Errc::DimensionMismatch, "orthonormal_complement: empty vector");
  // Householder reflector sending e1 onto the line through x; columns 2..h of
  // the reflector span the orthocomplement.
  const Complex x0 = x(0);
  const Complex beta = std::abs(x0) > 1e-300 ? x0 / std::abs(x0) : Complex(1.0, 0.0);
  Ket w = x / x.norm();
  w(0) += beta;
  Matrix U = Matrix::Identity(h, h);
  const double wn2 = w.squaredNorm();
  if (wn2 > 1e-300) U -= (2.0 / wn2) * (w * w.adjoint());
  return U.rightCols(h - 1);
}

}  // namespace posmap
