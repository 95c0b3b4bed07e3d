#ifndef BLOCHSEP_STATES_HPP
#define BLOCHSEP_STATES_HPP

#include <cstdint>

#include "blochsep/bloch.hpp"

namespace blochsep {

/// Isotropic mixture (1-p)/n^2 I + p |Phi+><Phi+| with
/// |Phi+> = sum_i |ii> / sqrt(n), carried as dims (n, 1, n).
/// p may go slightly negative, down to -1/(n^2-1) where positivity is lost.
DensityMatrix isotropic(int n, double p);

/// GHZ mixture (1-p)/n^3 I + p |GHZ><GHZ| with
/// |GHZ> = sum_i |iii> / sqrt(n), on dims (n, n, n).
DensityMatrix ghz_mixed(int n, double p);

/// Gram-construction random state G G^dag / Tr(G G^dag).
DensityMatrix random_density(const std::vector<int>& dims, std::uint64_t seed);

/// Explicit convex mixture of pure product states, with the Bloch
/// coefficient vector of each small-subsystem factor cached. For each term
/// |a|^2 = 2(1-1/N1) and |b|^2 = 2(1-1/N2).
struct SeparableEnsemble {
  std::vector<int> dims;  // 2 or 3 entries
  std::vector<double> weights;
  // factors[t][k] = unit vector of term t on subsystem k
  std::vector<std::vector<Eigen::VectorXcd>> factors;
  std::vector<RealVector> a;  // Bloch vector of the first factor, per term
  std::vector<RealVector> b;  // second factor (empty vectors when N2 = 1)

  /// Assembles sum_t w_t |psi_t><psi_t| over the full space.
  ComplexMatrix assemble() const;

  /// Coefficient operators built directly from the ensemble data
  /// (weights, Bloch vectors and third-subsystem projectors), bypassing
  /// any decomposition of the assembled matrix.
  TripartiteBloch induced_bloch() const;
};

/// Random separable state with `terms` product terms; the returned
/// DensityMatrix is exactly the ensemble's assembled matrix.
std::pair<DensityMatrix, SeparableEnsemble> random_separable(
    const std::vector<int>& dims, int terms, std::uint64_t seed);

/// Bloch vector of a single-subsystem state: coords(i) = Tr(rho lambda_i).
RealVector bloch_vector(const ComplexMatrix& rho);

}  // namespace blochsep

#endif  // BLOCHSEP_STATES_HPP
