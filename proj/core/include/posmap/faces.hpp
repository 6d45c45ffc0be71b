#ifndef POSMAP_FACES_HPP
#define POSMAP_FACES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "posmap/map.hpp"

namespace posmap {

struct GMembership {
  bool member;
  double lambda;
  bool lambda_clamped;  // Re<x,Yx> was below -tol and got clamped to 0
};

/// phi in G_{xi,x}: phi(xi xi*) = lambda xx* for some lambda >= 0.
/// Tested as ||Y - <x,Yx> xx*|| <= tol * max(1, ||Y||).
GMembership in_G(const LinearMap& phi, const Ket& xi, const Ket& x, double tol);

/// phi in F_{eta,y}: phi(eta eta*) y = 0, tested against tol * max(1, ||phi||).
bool in_F(const LinearMap& phi, const Ket& eta, const Ket& y, double tol);

struct FacePoint {
  Ket xi;
  Ket x;
  double lambda;
};

/// Local search for a face G_{xi,x} containing phi: minimizes the
/// second-largest eigenvalue of phi(xi xi*) over unit xi from basis and
/// random starts. A `nullopt` is a failed search, not a proof of absence.
std::optional<FacePoint> find_G_membership(const LinearMap& phi, double tol, int restarts,
                                           std::uint64_t seed = 0);

struct ChoiExceptional {
  Matrix projection;
  Matrix value;
  int rank;
};

/// The four 1-dim projections at which the built-in 3x3 example map has
/// rank-2 (rather than invertible) values, with those values and ranks.
std::vector<ChoiExceptional> choi_exceptional_projections(const ToleranceConfig& tol);

}  // namespace posmap

#endif
