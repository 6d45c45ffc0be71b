#ifndef POSMAP_TOLERANCES_HPP
#define POSMAP_TOLERANCES_HPP

#include <cstdint>

namespace posmap {

/// Named numerical tolerances shared by all modules.
struct ToleranceConfig {
  double eps_psd = 1e-8;    // eigenvalue cutoff for PSD verdicts
  double eps_rank = 1e-8;   // relative singular-value cutoff for numerical rank
  double eps_eq = 1e-9;     // entrywise / residual equality
  double opt_tol = 1e-10;   // optimizer stopping (improvement per sweep)
  int max_iters = 200;      // optimizer sweep cap

  bool valid() const {
    return eps_psd >= 0 && eps_rank >= 0 && eps_eq >= 0 && opt_tol > 0 && max_iters >= 0;
  }
};

}  // namespace posmap

#endif
