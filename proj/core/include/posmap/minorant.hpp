#ifndef POSMAP_MINORANT_HPP
#define POSMAP_MINORANT_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "posmap/map.hpp"

namespace posmap {

/// A triple (xi, x, lambda) with phi(xi xi*) x = lambda x and lambda > 0.
struct MinorantSeed {
  Ket xi;
  Ket x;
  double lambda;
};

/// Deterministic seed scan: every standard basis xi is ranked by the top
/// eigenvalue of phi(xi xi*) and the largest is taken (eigenvector tie-break:
/// normalized projection of the lowest-index basis vector onto the top
/// eigenspace). Random unit xi follow when no basis candidate clears eps_psd.
/// Throws ZeroMap.
MinorantSeed find_seed(const LinearMap& phi, const ToleranceConfig& tol,
                       std::uint64_t seed = 0);

/// Column j = lambda^{-1/2} phi(e_j xi*) x.
Matrix build_B(const LinearMap& phi, const MinorantSeed& seed, const ToleranceConfig& tol);

/// Column j = lambda^{-1/2} phi(xi conj(e_j)*) x.
Matrix build_C(const LinearMap& phi, const MinorantSeed& seed, const ToleranceConfig& tol);

/// psi = B . B* and chi = C (.)^T C* from the seed operators above.
LinearMap build_psi(const LinearMap& phi, const MinorantSeed& seed, const ToleranceConfig& tol);
LinearMap build_chi(const LinearMap& phi, const MinorantSeed& seed, const ToleranceConfig& tol);

enum class DominationMethod { MapDifferenceSeesaw, InequalitySampling, WuCriterion };
enum class MinorantKind { Psi, Chi };

/// Verdict of a rho <= phi test. worst_violation is the most negative margin
/// seen (see-saw value, sampled inequality margin, or criterion eigenvalue);
/// when holds is false the witness pair (eta, y) re-evaluates below -tol.
struct DominationReport {
  bool holds;
  DominationMethod method;
  double worst_violation;
  std::optional<std::pair<Ket, Ket>> witness;
};

/// rho <= phi test.
///  - MapDifferenceSeesaw: see-saw positivity of phi - rho (budget = restarts).
///  - InequalitySampling: samples the seed inequality
///    |<y, phi(eta xi*) x>|^2 <= <x,phi(xi xi*)x><y, phi(eta eta*) y>
///    (or its mirrored form for chi) on the structured grid plus `budget`
///    random pairs. Requires the seed that built rho.
///  - WuCriterion: per-eta PSD criterion on the component form; requires the
///    seed and phi in G_{xi,x} (else MethodUnavailable).
/// Negative outcomes are certificates; "holds" is evidence except where the
/// inequality family is exhaustive.
DominationReport dominates(const LinearMap& phi, const LinearMap& rho, DominationMethod method,
                           const ToleranceConfig& tol, int budget, std::uint64_t seed = 0,
                           const std::optional<MinorantSeed>& minorant_seed = std::nullopt,
                           MinorantKind kind = MinorantKind::Psi);

struct ExtremalityResult {
  enum class Verdict { Falsified, NotFalsified };

  Verdict verdict;
  std::optional<LinearMap> certificate;  // dominated, non-proportional minorant
  double proportionality_residual = 0.0;
};

/// Tries psi and chi from every basis seed; a dominated minorant that is not
/// proportional to phi falsifies extremality. NotFalsified is not a proof.
ExtremalityResult extremality_falsifier(const LinearMap& phi, const ToleranceConfig& tol,
                                        int budget, std::uint64_t seed = 0);

struct T2PosReport {
  bool hypothesis_met;     // Schmidt-2 evidence of 2-positivity
  double schmidt2_value;
  int seeds_checked;
  int violations;          // sampled seed-inequality violations across seeds
  double worst_violation;
  bool passed;             // hypothesis met and zero violations
};

/// Harness for "2-positive implies the seed inequality at every seed":
/// gathers Schmidt-2 evidence, then samples the inequality for every basis
/// seed; any violation is reported as a numerical red flag.
T2PosReport verify_t2pos(const LinearMap& phi, const ToleranceConfig& tol, int budget,
                         std::uint64_t seed = 0);

}  // namespace posmap

#endif
