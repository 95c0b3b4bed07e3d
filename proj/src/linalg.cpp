#include "blochsep/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <numeric>
#include <sstream>

namespace blochsep {

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

namespace {

void require_hermitian(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("herm_eigvals: matrix is not square");
  }
  Eigen::Index bi = 0, bj = 0;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      double dev = std::abs(a(i, j) - std::conj(a(j, i)));
      if (dev > worst) {
        worst = dev;
        bi = i;
        bj = j;
      }
    }
  }
  if (worst > kHermTol) {
    std::ostringstream msg;
    msg << "herm_eigvals: input not Hermitian, |A(" << bi << "," << bj
        << ") - conj(A(" << bj << "," << bi << "))| = " << worst;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

RealVector herm_eigvals(const ComplexMatrix& a) {
  require_hermitian(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eig(const ComplexMatrix& a) {
  return herm_eigvals(a)(0);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix DensityMatrix::make(std::vector<int> dims, ComplexMatrix mat) {
  if (dims.size() != 2 && dims.size() != 3) {
    throw std::invalid_argument("DensityMatrix: need 2 or 3 subsystems");
  }
  long prod = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("DensityMatrix: dimension < 1");
    prod *= d;
  }
  if (mat.rows() != mat.cols() || mat.rows() != prod) {
    throw std::invalid_argument(
        "DensityMatrix: matrix size does not match product of dims");
  }
  if (!mat.allFinite()) {
    throw std::invalid_argument("DensityMatrix: non-finite entries");
  }
  if (!is_hermitian(mat, 1e-10)) {
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-10");
  }
  if (std::abs(mat.trace() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: trace not 1 within 1e-10");
  }
  if (min_eig(mat) < -1e-10) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }
  return DensityMatrix(std::move(dims), std::move(mat));
}

namespace {

std::vector<long> strides_of(const std::vector<int>& dims) {
  std::vector<long> s(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
    s[k] = s[k + 1] * dims[k + 1];
  }
  return s;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& mat,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  const int parties = static_cast<int>(dims.size());
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: empty keep set");
  }
  std::vector<bool> kept(parties, false);
  for (int k : keep) {
    if (k < 0 || k >= parties || kept[k]) {
      throw std::invalid_argument("partial_trace: invalid subsystem index");
    }
    kept[k] = true;
  }
  const auto stride = strides_of(dims);
  long keep_dim = 1, trace_dim = 1;
  std::vector<int> keep_idx, trace_idx;
  for (int k = 0; k < parties; ++k) {
    if (kept[k]) {
      keep_dim *= dims[k];
      keep_idx.push_back(k);
    } else {
      trace_dim *= dims[k];
      trace_idx.push_back(k);
    }
  }
  // Row offset of a (kept multi-index, traced multi-index) combination.
  auto offset = [&](long kv, long tv) {
    long off = 0;
    for (int k = static_cast<int>(keep_idx.size()) - 1; k >= 0; --k) {
      off += (kv % dims[keep_idx[k]]) * stride[keep_idx[k]];
      kv /= dims[keep_idx[k]];
    }
    for (int k = static_cast<int>(trace_idx.size()) - 1; k >= 0; --k) {
      off += (tv % dims[trace_idx[k]]) * stride[trace_idx[k]];
      tv /= dims[trace_idx[k]];
    }
    return off;
  };
  ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);
  for (long r = 0; r < keep_dim; ++r) {
    for (long c = 0; c < keep_dim; ++c) {
      Complex sum{0.0, 0.0};
      for (long t = 0; t < trace_dim; ++t) {
        sum += mat(offset(r, t), offset(c, t));
      }
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& mat,
                                const std::vector<int>& dims,
                                const std::vector<int>& subset) {
  const int parties = static_cast<int>(dims.size());
  if (subset.empty()) {
    throw std::invalid_argument("partial_transpose: empty subset");
  }
  std::vector<bool> flip(parties, false);
  for (int k : subset) {
    if (k < 0 || k >= parties || flip[k]) {
      throw std::invalid_argument("partial_transpose: invalid subsystem index");
    }
    flip[k] = true;
  }
  const auto stride = strides_of(dims);
  const long total = mat.rows();
  ComplexMatrix out(total, total);
  std::vector<int> ri(parties), ci(parties);
  for (long r = 0; r < total; ++r) {
    long rv = r;
    for (int k = parties - 1; k >= 0; --k) {
      ri[k] = static_cast<int>(rv % dims[k]);
      rv /= dims[k];
    }
    for (long c = 0; c < total; ++c) {
      long cv = c;
      for (int k = parties - 1; k >= 0; --k) {
        ci[k] = static_cast<int>(cv % dims[k]);
        cv /= dims[k];
      }
      long sr = 0, sc = 0;
      for (int k = 0; k < parties; ++k) {
        sr += (flip[k] ? ci[k] : ri[k]) * stride[k];
        sc += (flip[k] ? ri[k] : ci[k]) * stride[k];
      }
      out(sr, sc) = mat(r, c);
    }
  }
  return out;
}

}  // namespace blochsep
