#ifndef POSMAP_POSITIVITY_HPP
#define POSMAP_POSITIVITY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "posmap/map.hpp"

namespace posmap {

/// Outcome of a see-saw minimization. The witness is a list of Schmidt
/// pairs (xi_m, y_m): the minimizing vector is w = sum_m conj(xi_m) (x) y_m,
/// and best_value = <w, J w> with ||w|| = 1. Negative best_value certifies
/// non-membership (falsifier semantics); nonnegative values are evidence.
struct OptReport {
  double best_value = 0.0;
  std::vector<std::pair<Ket, Ket>> witness;
  int restarts_used = 0;
  bool converged = false;
};

/// Re-evaluates <w, J w> for the witness pairs of an OptReport.
double schmidt_witness_value(const LinearMap& phi,
                             const std::vector<std::pair<Ket, Ket>>& witness);

/// Minimum of <y, phi(xi xi*) y> over unit xi, y via alternating exact
/// eigenvector updates with multi-restart.
OptReport min_product_value(const LinearMap& phi, const ToleranceConfig& tol, int restarts,
                            std::uint64_t seed = 0);

/// Minimum of <w, J w> over unit vectors of Schmidt rank <= s. s = 1 is the
/// product minimum above; s = min(k,h) is the unrestricted smallest
/// eigenvalue of the Choi matrix.
OptReport min_schmidt_k_value(const LinearMap& phi, int s, const ToleranceConfig& tol,
                              int restarts, std::uint64_t seed = 0);

struct CpCheck {
  bool holds;
  double min_eig;
};

/// lambda_min(to_choi(phi)) >= -eps_psd.
CpCheck is_completely_positive(const LinearMap& phi, const ToleranceConfig& tol);

/// lambda_min(PT1(to_choi(phi))) >= -eps_psd.
CpCheck is_completely_copositive(const LinearMap& phi, const ToleranceConfig& tol);

struct SchwarzConfig {
  std::vector<double> gamma_grid;
  int sample_count = 64;

  /// Log-spaced powers of two 2^-8 .. 2^8. The underlying inequality only
  /// asserts existence of some gamma > 0; the grid range is a module
  /// decision and is echoed in every report.
  static SchwarzConfig defaults();
};

struct SchwarzReport {
  std::optional<double> best_gamma;
  std::vector<double> gamma_grid;
  std::vector<double> worst_defect;  // most negative eigenvalue seen, per gamma
};

/// Worst eigenvalue of gamma*phi(X*X) - gamma^2*phi(X*)phi(X) over sampled
/// contractions X (plus the identity and all matrix units). A gamma whose
/// worst defect clears -eps_psd is evidence of local complete positivity;
/// none found proves nothing.
SchwarzReport schwarz_defect(const LinearMap& phi, const SchwarzConfig& cfg,
                             const ToleranceConfig& tol, std::uint64_t seed = 0);

/// Mirror with phi(X X*) on the left-hand side.
SchwarzReport schwarz_co_defect(const LinearMap& phi, const SchwarzConfig& cfg,
                                const ToleranceConfig& tol, std::uint64_t seed = 0);

}  // namespace posmap

#endif
