#ifndef POSMAP_DECOMP_HPP
#define POSMAP_DECOMP_HPP

#include <cstdint>
#include <optional>

#include "posmap/map.hpp"

namespace posmap {

/// Outcome of the decomposability analyses.
///  - Decomposed: J = S1 + PT1(S2) with S1, S2 PSD up to eps_psd and
///    ||J - S1 - PT1(S2)|| = residual below the declared threshold.
///  - WitnessFound: W PSD with PSD partial transpose, Tr W = 1 and
///    value = Tr(J W) certifiably negative: phi is not decomposable.
///  - Inconclusive: neither certificate; carries the best numbers seen.
struct DecompResult {
  enum class Kind { Decomposed, WitnessFound, Inconclusive };

  Kind kind;
  Matrix S1, S2;  // Decomposed
  double residual = 0.0;
  Matrix W;  // WitnessFound
  double value = 0.0;
  int iterations = 0;
  std::optional<double> best_residual;       // Inconclusive (feasibility side)
  std::optional<double> best_witness_value;  // Inconclusive (witness side)
};

/// Dykstra alternating projection between the affine slice
/// {(S1,S2): S1 + PT1(S2) = J} and the product PSD cone. Declares Decomposed
/// when the affine gap at a cone-feasible iterate falls below
/// eps_eq * 10 * max(1, ||J||); stalls end in Inconclusive.
DecompResult decompose_search(const LinearMap& phi, const ToleranceConfig& tol,
                              int max_iters = 5000);

/// Projected gradient on Tr(J W) over {W >= 0, PT1(W) >= 0, Tr W = 1} with
/// Dykstra projections and fixed step 1/||J||. A final value below
/// -max(100 eps_psd, 1e-6), re-verified at eps_psd/10 feasibility, is a
/// nondecomposability certificate.
DecompResult ppt_witness_search(const LinearMap& phi, const ToleranceConfig& tol,
                                int restarts = 4, int max_iters = 5000,
                                std::uint64_t seed = 0);

}  // namespace posmap

#endif
