#ifndef POSMAP_BLOCKFORM_HPP
#define POSMAP_BLOCKFORM_HPP

#include <string>
#include <vector>

#include "posmap/map.hpp"
#include "posmap/rng.hpp"

namespace posmap {

/// Decomposition of an h x h operator Y relative to a unit vector x:
///   Y = alpha xx* + ux* + xv* + Z
/// with u, v orthogonal to x and Z supported on the orthocomplement H_x.
/// u, v and Z are stored in coordinates of `basis`, the deterministic
/// Householder completion of x (h x (h-1), orthonormal columns).
struct BlockForm {
  Complex alpha;
  Ket u;
  Ket v;
  Matrix Z;
  Matrix basis;
};

/// alpha = <x,Yx>, u = (I-xx*)Yx, v = (I-xx*)Y*x, Z = (I-xx*)Y(I-xx*).
/// Throws NotUnit when ||x|| is not 1.
BlockForm decompose_at(const Matrix& Y, const Ket& x, const ToleranceConfig& tol);

/// Exact reassembly of the decomposition.
Matrix recompose(const BlockForm& f, const Ket& x);

/// Positivity criterion in decomposed form: Y >= 0 iff alpha >= 0, Z >= 0,
/// u = v and uu* <= alpha Z; the degenerate alpha ~ 0 case forces u = 0.
bool psd_via_form(const BlockForm& f, const ToleranceConfig& tol);

/// Component data of a map phi in the face G_{xi,x}, at a fixed eta:
/// phi(eta xi*) = beta xx* + x v* + u x*  and
/// phi(eta eta*) = mu xx* + x r* + r x* + R.
/// Vectors/operators are in `basis` coordinates on H_x.
struct ComponentForm {
  Complex beta;
  Ket u;
  Ket v;
  double mu;
  Ket r;
  Matrix Rop;
  Matrix basis;
};

/// Extracts (beta, u, v, mu, r, R). Throws NotInFace when the H_x-corner of
/// phi(eta xi*) is not negligible (phi is then outside G_{xi,x}).
ComponentForm extract_components(const LinearMap& phi, const Ket& xi, const Ket& x,
                                 const Ket& eta, const ToleranceConfig& tol);

/// A positive trace-class probe rho = sigma xx* + xs* + sx* + S with
/// ss* <= sigma S; s and S in H_x coordinates.
struct ProbeFunctional {
  double sigma;
  Ket s;
  Matrix S;
};

/// Probes with S = ss*/sigma + (random PSD), which satisfies ss* <= sigma S
/// by construction.
std::vector<ProbeFunctional> random_probes(int count, int dim_hx, Rng& rng);

struct InequalityViolation {
  std::string inequality;  // "probe" | "beta" | "R" | "re"
  int index;               // probe or direction index; -1 for the scalar check
  double lhs;
  double rhs;
};

struct ComponentReport {
  std::vector<InequalityViolation> violations;
  double worst_margin;  // min over all checks of rhs - lhs
  int checks;
};

/// Evaluates the probe inequality |sigma beta + <s,u> + <v,s>|^2 <=
/// sigma lambda (sigma mu + 2 Re<s,r> + Tr(S R)) on every probe, the
/// direction inequalities on every direction, and the scalar |beta|^2 <=
/// lambda mu. Reports each violation beyond the slack tol.eps_eq * scale.
ComponentReport check_component_inequalities(const ComponentForm& c, double lambda,
                                             const ToleranceConfig& tol,
                                             const std::vector<ProbeFunctional>& probes,
                                             const std::vector<Ket>& directions);

struct WuCheck {
  bool psil_holds;
  bool chil_holds;
  double psil_min_eig;
  double chil_min_eig;
};

/// PSD tests of (lambda mu - |beta|^2)(lambda R - uu*) - (lambda r -
/// conj(beta) u)(...)* and of the mirrored form with v and beta.
WuCheck check_wu(const ComponentForm& c, double lambda, const ToleranceConfig& tol);

}  // namespace posmap

#endif
