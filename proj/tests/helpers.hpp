#ifndef POSMAP_TESTS_HELPERS_HPP
#define POSMAP_TESTS_HELPERS_HPP

#include "posmap/map.hpp"
#include "posmap/rng.hpp"

namespace posmap::testing {

inline LinearMap random_cp_map(Rng& rng, int k, int h, int terms = 1) {
  LinearMap phi = from_kraus(rng.matrix(h, k));
  for (int t = 1; t < terms; ++t)
    phi = scale_add(1.0, phi, 1.0, from_kraus(rng.matrix(h, k)));
  return phi;
}

inline LinearMap random_cocp_map(Rng& rng, int k, int h, int terms = 1) {
  LinearMap phi = from_cokraus(rng.matrix(h, k));
  for (int t = 1; t < terms; ++t)
    phi = scale_add(1.0, phi, 1.0, from_cokraus(rng.matrix(h, k)));
  return phi;
}

// Hermiticity-preserving but otherwise unconstrained: random Hermitian Choi.
inline LinearMap random_herm_preserving_map(Rng& rng, int k, int h) {
  return from_choi(rng.hermitian(k * h), k, h);
}

// Kraus operator adjusted so that B xi = c x for the given unit xi, x.
inline Matrix kraus_into_face(Rng& rng, int k, int h, const Ket& xi, const Ket& x) {
  Matrix B = rng.matrix(h, k);
  const Complex c = rng.cgaussian() + Complex(1.5, 0);
  B -= (B * xi) * xi.adjoint();
  B += (c * x) * xi.adjoint();
  return B;
}

// CP map with every Kraus term sending xi into the line through x.
inline LinearMap cp_map_in_face(Rng& rng, int k, int h, const Ket& xi, const Ket& x,
                                int terms = 1) {
  LinearMap phi = from_kraus(kraus_into_face(rng, k, h, xi, x));
  for (int t = 1; t < terms; ++t)
    phi = scale_add(1.0, phi, 1.0, from_kraus(kraus_into_face(rng, k, h, xi, x)));
  return phi;
}

}  // namespace posmap::testing

#endif
