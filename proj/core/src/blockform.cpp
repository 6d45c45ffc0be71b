#include "posmap/blockform.hpp"

#include <cmath>

namespace posmap {

BlockForm decompose_at(const Matrix& Y, const Ket& x, const ToleranceConfig& tol) {
  if (Y.rows() != Y.cols()) throw Error(Errc::NonSquare, "decompose_at: Y must be square");
  if (Y.rows() != x.size())
    throw Error(Errc::DimensionMismatch, "decompose_at: Y and x dimensions differ");
  if (std::abs(x.norm() - 1.0) > std::max(tol.eps_eq, 1e-9))
    throw Error(Errc::NotUnit, "decompose_at: x must be a unit vector");
  BlockForm f;
  f.basis = orthonormal_complement(x);
  f.alpha = x.dot(Y * x);
  // basis* annihilates the x-component, so the (I-xx*) factors are implicit.
  f.u = f.basis.adjoint() * (Y * x);
  f.v = f.basis.adjoint() * (Y.adjoint() * x);
  f.Z = f.basis.adjoint() * Y * f.basis;
  return f;
}

Matrix recompose(const BlockForm& f, const Ket& x) {
  if (f.basis.rows() != x.size())
    throw Error(Errc::DimensionMismatch, "recompose: basis and x dimensions differ");
  const Ket u = f.basis * f.u;
  const Ket v = f.basis * f.v;
  return f.alpha * x * x.adjoint() + u * x.adjoint() + x * v.adjoint() +
         f.basis * f.Z * f.basis.adjoint();
}

bool psd_via_form(const BlockForm& f, const ToleranceConfig& tol) {
  const double part_scale =
      std::abs(f.alpha) + f.u.norm() + f.v.norm() + (f.Z.size() ? f.Z.norm() : 0.0);
  const double eq = std::max(tol.eps_eq, 1e-12 * part_scale);
  if (std::abs(f.alpha.imag()) > std::max(tol.eps_psd, 1e-12 * part_scale)) return false;
  const double alpha = f.alpha.real();
  if (alpha < -tol.eps_psd) return false;
  if ((f.u - f.v).norm() > eq) return false;
  if (f.Z.size() == 0) return f.u.norm() <= eq;
  if (min_eigenvalue(f.Z) < -tol.eps_psd) return false;
  if (alpha <= tol.eps_psd) {
    // Degenerate corner: uu* <= alpha Z with alpha ~ 0 forces u = 0.
    return f.u.norm() <= std::max(eq, std::sqrt(tol.eps_psd * f.Z.norm()));
  }
  return min_eigenvalue(alpha * f.Z - f.u * f.u.adjoint()) >= -tol.eps_psd;
}

ComponentForm extract_components(const LinearMap& phi, const Ket& xi, const Ket& x,
                                 const Ket& eta, const ToleranceConfig& tol) {
  const Matrix cross = phi.apply(eta * xi.adjoint());
  BlockForm fc = decompose_at(cross, x, tol);
  const double scale = std::max(1.0, map_norm(phi));
  if (fc.Z.norm() > std::max(tol.eps_eq, 1e3 * tol.eps_psd) * scale)
    throw Error(Errc::NotInFace,
                "extract_components: phi(eta xi*) has a corner on H_x; phi is not in G_{xi,x}");
  ComponentForm c;
  c.basis = fc.basis;
  c.beta = fc.alpha;
  c.u = fc.u;
  c.v = fc.v;
  BlockForm fd = decompose_at(phi.apply(eta * eta.adjoint()), x, tol);
  c.mu = fd.alpha.real();
  c.r = fd.u;
  c.Rop = fd.Z;
  return c;
}

std::vector<ProbeFunctional> random_probes(int count, int dim_hx, Rng& rng) {
  std::vector<ProbeFunctional> probes;
  probes.reserve(count);
  for (int n = 0; n < count; ++n) {
    ProbeFunctional p;
    p.sigma = 0.1 + rng.uniform() * 4.0;
    p.s = rng.ket(dim_hx);
    p.S = p.s * p.s.adjoint() / p.sigma + rng.psd(dim_hx);
    probes.push_back(std::move(p));
  }
  return probes;
}

ComponentReport check_component_inequalities(const ComponentForm& c, double lambda,
                                             const ToleranceConfig& tol,
                                             const std::vector<ProbeFunctional>& probes,
                                             const std::vector<Ket>& directions) {
  ComponentReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  report.checks = 0;
  const double mb2 = lambda * c.mu - std::norm(c.beta);
  const double scale = std::max(1.0, lambda * (std::abs(c.mu) + c.Rop.norm()) +
                                         std::norm(c.beta) + c.u.squaredNorm() +
                                         c.v.squaredNorm());
  const double slack = std::max(tol.eps_eq, 1e3 * tol.eps_psd) * scale;

  auto record = [&](const std::string& name, int index, double lhs, double rhs) {
    ++report.checks;
    report.worst_margin = std::min(report.worst_margin, rhs - lhs);
    if (lhs > rhs + slack) report.violations.push_back({name, index, lhs, rhs});
  };

  record("beta", -1, std::norm(c.beta), lambda * c.mu);

  for (size_t n = 0; n < probes.size(); ++n) {
    const ProbeFunctional& p = probes[n];
    const Complex lhs_c = p.sigma * c.beta + p.s.dot(c.u) + c.v.dot(p.s);
    const double rhs = p.sigma * lambda *
                       (p.sigma * c.mu + 2.0 * std::real(p.s.dot(c.r)) +
                        std::real((p.S * c.Rop).trace()));
    record("probe", static_cast<int>(n), std::norm(lhs_c), rhs);
  }

  for (size_t n = 0; n < directions.size(); ++n) {
    const Ket& y = directions[n];
    const double quad = std::norm(Complex(y.dot(c.u) + c.v.dot(y)));
    const double yRy = std::real(y.dot(c.Rop * y));
    record("R", static_cast<int>(n), quad, lambda * yRy);
    const Ket mix = lambda * c.r - std::conj(c.beta) * c.u - c.beta * c.v;
    const double re = std::real(y.dot(mix));
    record("re", static_cast<int>(n), re * re, mb2 * (lambda * yRy - quad));
  }
  return report;
}

WuCheck check_wu(const ComponentForm& c, double lambda, const ToleranceConfig& tol) {
  const double mb2 = lambda * c.mu - std::norm(c.beta);
  const Ket wu = lambda * c.r - std::conj(c.beta) * c.u;
  const Ket wv = lambda * c.r - c.beta * c.v;
  const Matrix lhs_u = mb2 * (lambda * c.Rop - c.u * c.u.adjoint()) - wu * wu.adjoint();
  const Matrix lhs_v = mb2 * (lambda * c.Rop - c.v * c.v.adjoint()) - wv * wv.adjoint();
  const double scale = std::max(1.0, lambda * lambda * (std::abs(c.mu) + c.Rop.norm()));
  WuCheck out;
  out.psil_min_eig = c.Rop.size() == 0 ? 0.0 : min_eigenvalue(lhs_u);
  out.chil_min_eig = c.Rop.size() == 0 ? 0.0 : min_eigenvalue(lhs_v);
  out.psil_holds = out.psil_min_eig >= -tol.eps_psd * scale;
  out.chil_holds = out.chil_min_eig >= -tol.eps_psd * scale;
  return out;
}

}  // namespace posmap
