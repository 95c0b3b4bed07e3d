#ifndef BLOCHSEP_BLOCH_HPP
#define BLOCHSEP_BLOCH_HPP

#include <array>

#include "blochsep/generators.hpp"
#include "blochsep/linalg.hpp"

namespace blochsep {

/// Radius of the largest ball guaranteed inside the Bloch body for
/// dimension n: sqrt(2/(n(n-1))).
double inner_radius(int n);

/// Radius of the smallest ball containing the Bloch body: sqrt(2(1-1/n)).
double outer_radius(int n);

/// Operator-coefficient form of a state on dims (N1, N2, N3):
///   rho = I x I x M0 + sum_i lambda_i x I x M[i]
///       + sum_j I x lambda_j x Mt[j] + sum_ij lambda_i x lambda_j x Mij[i][j]
/// where every coefficient operator acts on the third subsystem.
/// A bipartite N1 x N2 state is carried as dims (N1, 1, N2) with M and Mij
/// empty, so the same structure serves both cases.
struct TripartiteBloch {
  std::array<int, 3> dims{};
  ComplexMatrix M0;
  std::vector<ComplexMatrix> M;    // N1^2 - 1 entries
  std::vector<ComplexMatrix> Mt;   // N2^2 - 1 entries
  std::vector<std::vector<ComplexMatrix>> Mij;  // (N1^2-1) x (N2^2-1) grid
};

/// Extracts coefficient operators by generator orthogonality. Bipartite
/// inputs (2 dims) are embedded as (N1, 1, N2).
TripartiteBloch decompose(const DensityMatrix& rho);

/// Evaluates the defining sum literally; inverse of decompose.
ComplexMatrix reconstruct(const TripartiteBloch& b);

struct Theorem1Result {
  ComplexMatrix op;  // M0 - sum r_i M_i - sum s_j Mt_j + sum r_i s_j M_ij
  double min_eigenvalue = 0.0;
};

/// Evaluates the linear-functional operator of the positivity theorem.
/// r and s must lie in the closed inner Bloch balls of N1 and N2; for a
/// state-derived decomposition the result is positive semidefinite.
Theorem1Result theorem1_check(const TripartiteBloch& b, const RealVector& r,
                              const RealVector& s);

}  // namespace blochsep

#endif  // BLOCHSEP_BLOCH_HPP
