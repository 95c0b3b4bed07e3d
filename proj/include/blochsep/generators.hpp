#ifndef BLOCHSEP_GENERATORS_HPP
#define BLOCHSEP_GENERATORS_HPP

#include "blochsep/linalg.hpp"

namespace blochsep {

/// Ordered traceless Hermitian generator basis of SU(n), normalized so that
/// Tr(lambda_i lambda_j) = 2 delta_ij.
///
/// Ordering is fixed as
///   [w_1 .. w_{n-1},
///    u_{12}, u_{13}, .., u_{n-1,n}   (j < k lexicographic),
///    v_{12}, v_{13}, .., v_{n-1,n}   (j < k lexicographic)]
/// with
///   w_l    = -sqrt(2/(l(l+1))) (P_11 + .. + P_ll - l P_{l+1,l+1})
///   u_{jk} = P_jk + P_kj
///   v_{jk} = i (P_jk - P_kj)
/// so the first n-1 + n(n-1)/2 generators are symmetric and the trailing
/// n(n-1)/2 are antisymmetric. Every row/column index of a transform matrix
/// refers to this ordering.
struct GeneratorBasis {
  int n = 0;
  std::vector<ComplexMatrix> matrices;  // n^2 - 1 entries

  int count() const { return static_cast<int>(matrices.size()); }
  /// Number of leading symmetric (transpose-even) generators.
  int symmetric_count() const { return n - 1 + n * (n - 1) / 2; }
};

/// Builds the basis for n >= 2; throws std::invalid_argument otherwise.
GeneratorBasis build_generators(int n);

/// Shared immutable cache; n = 1 yields the empty basis (SU(1) has no
/// generators), which is what the bipartite embedding relies on.
const GeneratorBasis& generators(int n);

}  // namespace blochsep

#endif  // BLOCHSEP_GENERATORS_HPP
