#ifndef POSMAP_RANK1_HPP
#define POSMAP_RANK1_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "posmap/map.hpp"

namespace posmap {

/// Case analysis for operators A with rank(xx* + |l|^2 yy* + lA + conj(l)A*)
/// <= 1 for all complex l:
///  - IndepXY: A = mu xy* or mu yx* with |mu| = 1 (x, y independent)
///  - DepX:    A = mu xx*                         (x != 0, y parallel to x)
///  - DepY:    A = mu yy*                         (y != 0, x parallel to y)
///  - BothZero: A = c P for a 1-dim projection P  (x = y = 0)
///  - NoCase:  none of the admissible forms fits; carries a witness l with
///             rank >= 2 found by the scan.
struct LemmaCase {
  enum class Kind { IndepXY, DepX, DepY, BothZero, NoCase };
  enum class Orientation { XYStar, YXStar };

  Kind kind;
  Complex mu = 0.0;  // form coefficient; projection scale for BothZero
  Orientation orientation = Orientation::XYStar;
  Complex witness_lambda = 0.0;  // NoCase
  int witness_rank = 0;          // NoCase
};

struct RankScan {
  bool all_rank_le_1;
  Complex worst_lambda;
  int worst_rank;
};

/// Evaluates numerical_rank(xx* + |l|^2 yy* + lA + conj(l)A*) on the
/// deterministic grid l = r e^{i theta}, r in {1/4,1/2,1,2,4}, 32 angles,
/// plus lambda_samples random draws. Returns the worst case found.
RankScan lemma_rank_scan(const Ket& x, const Ket& y, const Matrix& A, int lambda_samples,
                         const ToleranceConfig& tol, std::uint64_t seed = 0);

/// Fits A against the admissible forms, accepting a fit whose residual is
/// within eps_eq * ||A||; otherwise NoCase with a scan witness.
LemmaCase lemma_classify(const Ket& x, const Ket& y, const Matrix& A,
                         const ToleranceConfig& tol);

struct RankProfile {
  int max_rank = 0;
  Ket witness;  // first unit vector attaining max_rank in scan order
  std::vector<std::pair<Ket, int>> per_basis;  // structured vectors with their ranks
};

/// Ranks of phi(xi xi*) over all standard basis vectors, the pairwise
/// combinations (e_i +- e_j)/sqrt(2) and (e_i +- i e_j)/sqrt(2), and
/// `samples` random unit vectors.
RankProfile rank_profile(const LinearMap& phi, int samples, const ToleranceConfig& tol,
                         std::uint64_t seed = 0);

/// Classification of a rank-1 nonincreasing positive map:
/// Functional (phi = Tr(M .) Q), Kraus (phi = B . B*), CoKraus
/// (phi = C (.)^T C*), or NotRankOne with a rank-1 projection witness whose
/// image has rank >= 2.
struct MapClass {
  enum class Kind { Functional, Kraus, CoKraus, NotRankOne };

  Kind kind;
  Matrix M, Q;     // Functional
  Matrix B;        // Kraus
  Matrix C;        // CoKraus
  Matrix witness;  // NotRankOne
  int observed_rank = 0;
  double residual = 0.0;  // rebuild distance of the accepted branch
};

/// Branch order Kraus -> CoKraus -> Functional (pure functionals are
/// simultaneously Kraus; the first verified branch wins). The zero map is
/// classified Kraus(B = 0) by convention.
MapClass classify_rank1(const LinearMap& phi, const ToleranceConfig& tol);

/// min over t of ||e^{it} A - B||_F: phase-invariant recovery error.
double phase_aligned_distance(const Matrix& A, const Matrix& B);

}  // namespace posmap

#endif
