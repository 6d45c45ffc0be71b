#ifndef POSMAP_RNG_HPP
#define POSMAP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "posmap/linalg.hpp"

namespace posmap {

/// Seeded generator for all stochastic routines. Draws doubles from the raw
/// 53-bit output of mt19937_64 and rolls its own Box-Muller, so a seed fully
/// determines every sample independent of the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  Complex cgaussian() { return Complex(gaussian(), gaussian()) * M_SQRT1_2; }

  Ket ket(int dim) {
    Ket v(dim);
    for (int i = 0; i < dim; ++i) v(i) = cgaussian();
    return v;
  }

  Ket unit_ket(int dim) {
    Ket v = ket(dim);
    while (v.norm() < 1e-12) v = ket(dim);
    return v / v.norm();
  }

  Matrix matrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = cgaussian();
    return m;
  }

  Matrix hermitian(int dim) {
    Matrix g = matrix(dim, dim);
    return 0.5 * (g + g.adjoint());
  }

  Matrix psd(int dim) {
    Matrix g = matrix(dim, dim);
    return g.adjoint() * g / static_cast<double>(dim);
  }

  /// Random operator with spectral norm exactly 1 (used as a Schwarz sample).
  Matrix contraction(int dim) {
    Matrix g = matrix(dim, dim);
    const double top = g.jacobiSvd().singularValues()(0);
    if (top < 1e-12) return Matrix::Identity(dim, dim);
    return g / top;
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace posmap

#endif
