#ifndef POSMAP_PARALLELOGRAM_HPP
#define POSMAP_PARALLELOGRAM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "posmap/map.hpp"

namespace posmap {

/// An operator-valued function of a ket, R: C^k -> B(C^h), the candidate
/// quadratic restriction eta -> phi(eta eta*) of a linear map.
struct QuadraticFunction {
  int dim_in;
  int dim_out;
  std::function<Matrix(const Ket&)> eval;
  bool positive_flagged = false;
};

struct ParallelogramReport {
  bool ok;
  double max_residual;
  std::optional<std::pair<Ket, Ket>> violating_pair;
  int checks;
};

/// Residuals of R(xi+eta)+R(xi-eta) = 2R(xi)+2R(eta) and of
/// R(-eta) = R(i eta) = R(eta) on all basis pairs plus `samples` random pairs.
ParallelogramReport check_parallelogram(const QuadraticFunction& Rf, int samples,
                                        const ToleranceConfig& tol, std::uint64_t seed = 0);

/// Polarization reconstruction of the linear map with phi(eta eta*) = R(eta):
/// block (i,j) comes from the four evaluations at e_i +- e_j and i e_i +- e_j.
/// Verifies the parallelogram identity first and throws IdentityViolated
/// (naming the violating pair) on failure.
LinearMap reconstruct(const QuadraticFunction& Rf, const ToleranceConfig& tol);

/// The 4k^2 evaluation vectors of the polarization, ordered (i,j) ->
/// e_i+e_j, e_i-e_j, i*e_i+e_j, i*e_i-e_j.
std::vector<Ket> reconstruction_grid(int k);

/// Reconstruction from values of R tabulated on reconstruction_grid(k) (same
/// order). Runs the grid-restricted parallelogram checks (2R(e_i) recovered
/// as R(2e_i)/2), polarizes, and verifies the result reproduces every
/// tabulated value; IdentityViolated names the offending pair.
LinearMap reconstruct_tabulated(int k, int h, const std::vector<Matrix>& values,
                                const ToleranceConfig& tol);

}  // namespace posmap

#endif
