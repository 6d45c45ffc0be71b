#include "posmap/parallelogram.hpp"

#include <cmath>
#include <sstream>

#include "posmap/rng.hpp"

namespace posmap {

namespace {

std::string pair_string(const Ket& xi, const Ket& eta) {
  std::ostringstream os;
  os << "xi = [";
  for (Eigen::Index i = 0; i < xi.size(); ++i)
    os << (i ? ", " : "") << xi(i).real() << (xi(i).imag() < 0 ? "-" : "+")
       << std::abs(xi(i).imag()) << "i";
  os << "], eta = [";
  for (Eigen::Index i = 0; i < eta.size(); ++i)
    os << (i ? ", " : "") << eta(i).real() << (eta(i).imag() < 0 ? "-" : "+")
       << std::abs(eta(i).imag()) << "i";
  os << "]";
  return os.str();
}

}  // namespace

ParallelogramReport check_parallelogram(const QuadraticFunction& Rf, int samples,
                                        const ToleranceConfig& tol, std::uint64_t seed) {
  if (samples < 1) throw Error(Errc::BadParams, "check_parallelogram: samples >= 1");
  const int k = Rf.dim_in;
  Rng rng(seed);

  std::vector<std::pair<Ket, Ket>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) pairs.emplace_back(Ket::Unit(k, i), Ket::Unit(k, j));
  for (int n = 0; n < samples; ++n) pairs.emplace_back(rng.ket(k), rng.ket(k));

  ParallelogramReport report{true, 0.0, std::nullopt, 0};
  for (const auto& [xi, eta] : pairs) {
    const Matrix rxi = Rf.eval(xi);
    const Matrix reta = Rf.eval(eta);
    const double scale = std::max(1.0, rxi.norm() + reta.norm());
    const double residual =
        std::max({(Rf.eval(xi + eta) + Rf.eval(xi - eta) - 2.0 * rxi - 2.0 * reta).norm(),
                  (Rf.eval(-eta) - reta).norm(),
                  (Rf.eval(Complex(0, 1) * eta) - reta).norm()}) /
        scale;
    ++report.checks;
    if (residual > report.max_residual) {
      report.max_residual = residual;
      if (residual > std::max(tol.eps_eq, 1e-10)) {
        report.ok = false;
        if (!report.violating_pair) report.violating_pair = std::make_pair(xi, eta);
      }
    }
  }
  return report;
}

LinearMap reconstruct(const QuadraticFunction& Rf, const ToleranceConfig& tol) {
  const int k = Rf.dim_in, h = Rf.dim_out;
  const ParallelogramReport check = check_parallelogram(Rf, 16, tol);
  if (!check.ok) {
    std::string where = check.violating_pair
                            ? pair_string(check.violating_pair->first, check.violating_pair->second)
                            : "unknown pair";
    throw Error(Errc::IdentityViolated,
                "parallelogram identity fails (residual " + std::to_string(check.max_residual) +
                    ") at " + where);
  }

  const Complex im(0, 1);
  LinearMap phi(k, h);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Ket ei = Ket::Unit(k, i), ej = Ket::Unit(k, j);
      // [e_j, e_i] = 1/4 [R(e_i+e_j) - R(e_i-e_j)] - i/4 [R(ie_i+e_j) - R(ie_i-e_j)].
      const Matrix real_part = 0.25 * (Rf.eval(ei + ej) - Rf.eval(ei - ej));
      const Matrix imag_part = 0.25 * (Rf.eval(im * ei + ej) - Rf.eval(im * ei - ej));
      phi.block(i, j) = real_part - im * imag_part;
    }

  // The polarization is exact for any quadratic restriction; a mismatch here
  // means R passed the sampled identity checks but is not one.
  for (const Ket& eta : scan_unit_vectors(k)) {
    const Matrix expect = Rf.eval(eta);
    const double scale = std::max(1.0, expect.norm());
    if ((phi.apply(eta * eta.adjoint()) - expect).norm() >
        std::max(1e3 * tol.eps_eq, 1e-8) * scale)
      throw Error(Errc::IdentityViolated,
                  "reconstructed map disagrees with R at a scan vector; R is not a "
                  "quadratic restriction");
  }
  return phi;
}

std::vector<Ket> reconstruction_grid(int k) {
  const Complex im(0, 1);
  std::vector<Ket> grid;
  grid.reserve(4 * static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Ket ei = Ket::Unit(k, i), ej = Ket::Unit(k, j);
      grid.push_back(ei + ej);
      grid.push_back(ei - ej);
      grid.push_back(im * ei + ej);
      grid.push_back(im * ei - ej);
    }
  return grid;
}

LinearMap reconstruct_tabulated(int k, int h, const std::vector<Matrix>& values,
                                const ToleranceConfig& tol) {
  if (values.size() != 4 * static_cast<size_t>(k) * k)
    throw Error(Errc::DimensionMismatch, "reconstruct_tabulated: need 4k^2 grid values");
  for (const Matrix& v : values)
    if (v.rows() != h || v.cols() != h)
      throw Error(Errc::DimensionMismatch, "reconstruct_tabulated: value dimension mismatch");

  auto at = [&](int i, int j, int which) -> const Matrix& {
    return values[4 * (static_cast<size_t>(i) * k + j) + which];
  };
  double scale = 1.0;
  for (const Matrix& v : values) scale = std::max(scale, v.norm());
  const double slack = std::max(1e3 * tol.eps_eq, 1e-8) * scale;

  // Grid-restricted identity checks. R(2e_i) sits at the (i,i) "+" slot and
  // R(e_i - e_i) = R(0) at the (i,i) "-" slot; quadratic scaling gives
  // 2 R(e_i) = R(2e_i) / 2.
  for (int i = 0; i < k; ++i)
    if (at(i, i, 1).norm() > slack)
      throw Error(Errc::IdentityViolated,
                  "tabulated R(0) is nonzero at pair (e_" + std::to_string(i + 1) + ", e_" +
                      std::to_string(i + 1) + ")");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const Matrix twice_sum = 0.5 * at(i, i, 0) + 0.5 * at(j, j, 0);
      const std::string pair_name =
          "(e_" + std::to_string(i + 1) + ", e_" + std::to_string(j + 1) + ")";
      if ((at(i, j, 0) + at(i, j, 1) - twice_sum).norm() > slack)
        throw Error(Errc::IdentityViolated, "parallelogram identity fails at " + pair_name);
      if ((at(i, j, 2) + at(i, j, 3) - twice_sum).norm() > slack)
        throw Error(Errc::IdentityViolated,
                    "parallelogram identity fails at the imaginary pair " + pair_name);
    }

  const Complex im(0, 1);
  LinearMap phi(k, h);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      phi.block(i, j) =
          0.25 * (at(i, j, 0) - at(i, j, 1)) - im * 0.25 * (at(i, j, 2) - at(i, j, 3));

  // Every tabulated value must be reproduced by the polarized map.
  const std::vector<Ket> grid = reconstruction_grid(k);
  for (size_t n = 0; n < grid.size(); ++n)
    if ((phi.apply(grid[n] * grid[n].adjoint()) - values[n]).norm() > slack)
      throw Error(Errc::IdentityViolated,
                  "tabulated values are not the quadratic restriction of a linear map "
                  "(grid entry " +
                      std::to_string(n) + ")");
  return phi;
}

}  // namespace posmap
