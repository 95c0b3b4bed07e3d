#ifndef BLOCHSEP_LINALG_HPP
#define BLOCHSEP_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace blochsep {

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

/// Tolerance below which an operator counts as positive semidefinite.
inline constexpr double kPosTol = 1e-10;

/// Margin an eigenvalue must clear below zero before we call a verdict.
inline constexpr double kNegMargin = 1e-9;

/// Hermiticity tolerance required by the eigensolver entry points.
inline constexpr double kHermTol = 1e-8;

bool is_hermitian(const ComplexMatrix& a, double tol);

/// All eigenvalues of a Hermitian matrix, ascending.
/// Throws std::invalid_argument (naming the offending entry) when the input
/// deviates from Hermiticity by more than kHermTol.
RealVector herm_eigvals(const ComplexMatrix& a);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eig(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity (all at 1e-10)
  /// before constructing; throws std::invalid_argument otherwise.
  static DensityMatrix make(std::vector<int> dims, ComplexMatrix mat);

  const std::vector<int>& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return mat_; }
  int total_dim() const { return static_cast<int>(mat_.rows()); }

 private:
  DensityMatrix(std::vector<int> dims, ComplexMatrix mat)
      : dims_(std::move(dims)), mat_(std::move(mat)) {}

  std::vector<int> dims_;
  ComplexMatrix mat_;
};

/// Reduced operator on the kept subsystems (in their original order).
ComplexMatrix partial_trace(const ComplexMatrix& mat,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep);

inline ComplexMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<int>& keep) {
  return partial_trace(rho.matrix(), rho.dims(), keep);
}

/// Transposes the indices of the chosen subsystems.
ComplexMatrix partial_transpose(const ComplexMatrix& mat,
                                const std::vector<int>& dims,
                                const std::vector<int>& subset);

inline ComplexMatrix partial_transpose(const DensityMatrix& rho,
                                       const std::vector<int>& subset) {
  return partial_transpose(rho.matrix(), rho.dims(), subset);
}

}  // namespace blochsep

#endif  // BLOCHSEP_LINALG_HPP
