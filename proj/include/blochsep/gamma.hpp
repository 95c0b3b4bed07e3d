#ifndef BLOCHSEP_GAMMA_HPP
#define BLOCHSEP_GAMMA_HPP

#include "blochsep/bloch.hpp"

namespace blochsep {

/// The pair of real contraction matrices acting on the two generator index
/// spaces. For a unit middle dimension R2 is the empty 0x0 matrix.
struct TransformPair {
  RealMatrix R1;  // (N1^2-1) x (N1^2-1)
  RealMatrix R2;  // (N2^2-1) x (N2^2-1)
  std::array<int, 2> dims{};  // (N1, N2)
};

struct ConstraintReport {
  bool ok = false;
  double max_singular_value = 0.0;
  double bound = 0.0;  // 1/(n-1)
};

/// The admissibility constraint: all singular values of R at most 1/(n-1)
/// (the Gram form (1/(n-1)^2) I - R^T R >= 0, checked to kPosTol).
ConstraintReport constraint_check(const RealMatrix& r, int n);

/// Checks both blocks; throws std::invalid_argument with the violating
/// singular value when a block fails.
void require_valid(const TransformPair& t);

/// The coefficient-space map:
///   M0' = M0,  M' = R1 M,  Mt' = R2 Mt,  Mij' = R1 Mij R2^T (gridwise).
/// Trace and Hermiticity of the reconstruction are preserved; for separable
/// states the reconstruction stays positive semidefinite.
TripartiteBloch apply_gamma(const TripartiteBloch& b, const TransformPair& t);

/// Smallest eigenvalue of reconstruct(apply_gamma(decompose(rho), t)).
double gamma_min_eig(const DensityMatrix& rho, const TransformPair& t);

/// Diagonal pair realizing the rescaled transpose map on one subsystem:
/// +1/(n-1) on the symmetric generators, -1/(n-1) on the antisymmetric ones.
/// For n = 2 this is diag(1, 1, -1), the partial-transpose block.
RealMatrix transpose_diagonal(int n);

enum class PptSubset { A, B, AB };

/// Transform pairs that reproduce partial transposition exactly on
/// 2 x 2 x N states. Requires N1 = N2 = 2.
TransformPair ppt_as_gamma(PptSubset which, const std::array<int, 2>& dims);

}  // namespace blochsep

#endif  // BLOCHSEP_GAMMA_HPP
