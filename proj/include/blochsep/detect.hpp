#ifndef BLOCHSEP_DETECT_HPP
#define BLOCHSEP_DETECT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "blochsep/gamma.hpp"
#include "blochsep/states.hpp"

namespace blochsep {

enum class Verdict { kEntangled, kInconclusive };

enum class StrategyKind { kSignDiagonal, kRandomOrthogonal, kLocalRefine };

struct SearchStrategy {
  StrategyKind kind = StrategyKind::kSignDiagonal;
  int samples = 50;
  std::uint64_t seed = 0;
};

struct DetectionReport {
  Verdict verdict = Verdict::kInconclusive;
  std::optional<TransformPair> witness;  // present iff entangled
  /// Most negative eigenvalue among candidates that were not certified
  /// positive by the fast screen (the first candidate is always evaluated).
  double min_eigenvalue = 0.0;
  SearchStrategy strategy;
  std::size_t candidates_tested = 0;
  std::uint64_t seed = 0;
};

/// Searches constraint-satisfying transform pairs for a negativity witness.
/// An ENTANGLED verdict carries a witness whose reconstruction has smallest
/// eigenvalue below -kNegMargin; INCONCLUSIVE means no tested candidate did.
/// Deterministic for a given (state, strategy) pair.
DetectionReport detect(const DensityMatrix& rho, const SearchStrategy& strategy,
                       std::size_t budget = 65536);

/// All 2^(n^2-1) diagonal matrices with entries +-1/(n-1). Exhaustive only
/// for n <= 3; larger bases are sampled inside detect instead.
std::vector<RealMatrix> enumerate_sign_diagonals(int n);

/// Random matrix with singular values in [0, 1/(n-1)]: a Haar-like
/// orthogonal factor times a uniform diagonal. Always passes the constraint.
RealMatrix random_contraction(int n, std::uint64_t seed);
RealMatrix random_contraction(int n, std::mt19937_64& rng);

/// Gradient-free descent on the smallest-eigenvalue objective: random entry
/// perturbations, clamped back onto the constraint set, accepted only when
/// the objective decreases. Never returns a worse pair than `start`.
TransformPair local_refine(const DensityMatrix& rho, const TransformPair& start,
                           int steps, std::uint64_t seed);

struct CriticalParameter {
  double value = 0.0;
  int sign_changes = 0;
  /// False when the 16-point pre-scan saw non-monotone samples; the root is
  /// then only a bracketed sign change, not a unique threshold.
  bool monotone = true;
};

/// Bisection root of p -> gamma_min_eig(family(p), t) on [lo, hi].
/// Returns nullopt when the endpoint signs agree.
std::optional<CriticalParameter> critical_parameter(
    const std::function<DensityMatrix(double)>& family, const TransformPair& t,
    double lo, double hi, double tol);

struct PptEntry {
  std::string name;          // e.g. "A", "BC"
  std::vector<int> subset;   // subsystem indices
  double min_eigenvalue = 0.0;
};

/// Smallest eigenvalue of the partial transpose over every nonempty proper
/// subset of the parties.
std::vector<PptEntry> ppt_check(const DensityMatrix& rho);

}  // namespace blochsep

#endif  // BLOCHSEP_DETECT_HPP
