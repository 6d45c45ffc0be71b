#include "posmap/faces.hpp"

#include <cmath>

#include "posmap/rng.hpp"

namespace posmap {

namespace {

void require_unit(const Ket& v, const char* name) {
  if (std::abs(v.norm() - 1.0) > 1e-9)
    throw Error(Errc::NotUnit, std::string(name) + " must be a unit vector");
}

// Second-largest eigenvalue of phi(xi xi*); 0 when dim_out == 1.
double second_eigenvalue(const LinearMap& phi, const Ket& xi) {
  const int h = phi.dim_out();
  if (h < 2) return 0.0;
  const EigH e = eig_hermitian(phi.apply(xi * xi.adjoint()));
  return e.eigenvalues(h - 2);
}

}  // namespace

GMembership in_G(const LinearMap& phi, const Ket& xi, const Ket& x, double tol) {
  require_unit(xi, "xi");
  require_unit(x, "x");
  if (xi.size() != phi.dim_in() || x.size() != phi.dim_out())
    throw Error(Errc::DimensionMismatch, "in_G: vector dimensions do not match the map");
  const Matrix Y = phi.apply(xi * xi.adjoint());
  const Complex alpha = x.dot(Y * x);
  const bool member = (Y - alpha * x * x.adjoint()).norm() <= tol * std::max(1.0, Y.norm());
  const bool clamped = alpha.real() < -tol;
  return GMembership{member, std::max(0.0, alpha.real()), clamped};
}

bool in_F(const LinearMap& phi, const Ket& eta, const Ket& y, double tol) {
  require_unit(eta, "eta");
  require_unit(y, "y");
  if (eta.size() != phi.dim_in() || y.size() != phi.dim_out())
    throw Error(Errc::DimensionMismatch, "in_F: vector dimensions do not match the map");
  return (phi.apply(eta * eta.adjoint()) * y).norm() <= tol * std::max(1.0, map_norm(phi));
}

std::optional<FacePoint> find_G_membership(const LinearMap& phi, double tol, int restarts,
                                           std::uint64_t seed) {
  if (phi.is_zero(0.0)) throw Error(Errc::ZeroMap, "find_G_membership: zero map");
  const int k = phi.dim_in();
  Rng rng(seed);

  Ket best_xi;
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Ket xi = r < k ? Ket(Ket::Unit(k, r)) : rng.unit_ket(k);
    double f = second_eigenvalue(phi, xi);
    // Gradient-free polish: random perturbations with a shrinking radius.
    double radius = 0.4;
    int since_improvement = 0;
    for (int it = 0; it < 80 && f > tol * 0.5; ++it) {
      Ket cand = xi + radius * rng.ket(k);
      cand /= cand.norm();
      const double fc = second_eigenvalue(phi, cand);
      if (fc < f) {
        f = fc;
        xi = cand;
        since_improvement = 0;
      } else if (++since_improvement >= 8) {
        radius *= 0.6;
        since_improvement = 0;
      }
    }
    if (f < best) {
      best = f;
      best_xi = xi;
    }
    if (best <= tol * 0.5) break;
  }

  if (best > tol) return std::nullopt;
  const Ket xi = canonical_phase(best_xi);
  const EigH e = eig_hermitian(phi.apply(xi * xi.adjoint()));
  const int h = phi.dim_out();
  return FacePoint{xi, canonical_phase(e.eigenvectors.col(h - 1)), e.eigenvalues(h - 1)};
}

std::vector<ChoiExceptional> choi_exceptional_projections(const ToleranceConfig& tol) {
  const LinearMap phi = choi_example();
  std::vector<Matrix> projections;
  projections.push_back(Matrix::Constant(3, 3, Complex(1.0 / 3.0, 0)));
  for (int i = 0; i < 3; ++i) {
    Matrix e = Matrix::Zero(3, 3);
    e(i, i) = 1.0;
    projections.push_back(e);
  }
  std::vector<ChoiExceptional> out;
  for (const Matrix& p : projections) {
    const Matrix value = phi.apply(p);
    out.push_back({p, value, numerical_rank(value, tol)});
  }
  return out;
}

}  // namespace posmap
