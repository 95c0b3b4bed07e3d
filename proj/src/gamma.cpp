#include "blochsep/gamma.hpp"

#include <Eigen/SVD>
#include <sstream>

namespace blochsep {

ConstraintReport constraint_check(const RealMatrix& r, int n) {
  if (n < 2) throw std::invalid_argument("constraint_check: n must be >= 2");
  const int m = n * n - 1;
  if (r.rows() != m || r.cols() != m) {
    throw std::invalid_argument("constraint_check: matrix must be (n^2-1) square");
  }
  ConstraintReport rep;
  rep.bound = 1.0 / (n - 1);
  rep.max_singular_value =
      r.size() == 0 ? 0.0 : Eigen::JacobiSVD<RealMatrix>(r).singularValues()(0);
  rep.ok = rep.max_singular_value <= rep.bound + kPosTol;
  return rep;
}

void require_valid(const TransformPair& t) {
  auto check = [](const RealMatrix& r, int n, const char* name) {
    if (n == 1) {
      if (r.size() != 0) {
        throw std::invalid_argument(
            std::string(name) + ": expected empty block for dimension 1");
      }
      return;
    }
    auto rep = constraint_check(r, n);
    if (!rep.ok) {
      std::ostringstream msg;
      msg << name << ": constraint violated, max singular value "
          << rep.max_singular_value << " > " << rep.bound;
      throw std::invalid_argument(msg.str());
    }
  };
  check(t.R1, t.dims[0], "R1");
  check(t.R2, t.dims[1], "R2");
}

TripartiteBloch apply_gamma(const TripartiteBloch& b, const TransformPair& t) {
  if (t.dims[0] != b.dims[0] || t.dims[1] != b.dims[1]) {
    throw std::invalid_argument("apply_gamma: dimension mismatch");
  }
  require_valid(t);
  const int m1 = static_cast<int>(b.M.size());
  const int m2 = static_cast<int>(b.Mt.size());
  TripartiteBloch out;
  out.dims = b.dims;
  out.M0 = b.M0;
  out.M.resize(m1);
  for (int k = 0; k < m1; ++k) {
    ComplexMatrix acc = ComplexMatrix::Zero(b.M0.rows(), b.M0.cols());
    for (int m = 0; m < m1; ++m) acc += t.R1(k, m) * b.M[m];
    out.M[k] = std::move(acc);
  }
  out.Mt.resize(m2);
  for (int l = 0; l < m2; ++l) {
    ComplexMatrix acc = ComplexMatrix::Zero(b.M0.rows(), b.M0.cols());
    for (int n = 0; n < m2; ++n) acc += t.R2(l, n) * b.Mt[n];
    out.Mt[l] = std::move(acc);
  }
  out.Mij.assign(m1, std::vector<ComplexMatrix>(
                         m2, ComplexMatrix::Zero(b.M0.rows(), b.M0.cols())));
  for (int i = 0; i < m1; ++i) {
    for (int j = 0; j < m2; ++j) {
      ComplexMatrix& acc = out.Mij[i][j];
      for (int m = 0; m < m1; ++m) {
        const double r1 = t.R1(i, m);
        if (r1 == 0.0) continue;
        for (int n = 0; n < m2; ++n) {
          const double w = r1 * t.R2(j, n);
          if (w != 0.0) acc += w * b.Mij[m][n];
        }
      }
    }
  }
  return out;
}

double gamma_min_eig(const DensityMatrix& rho, const TransformPair& t) {
  return min_eig(reconstruct(apply_gamma(decompose(rho), t)));
}

RealMatrix transpose_diagonal(int n) {
  const auto& basis = generators(n);
  const int m = basis.count();
  RealMatrix r = RealMatrix::Zero(m, m);
  const double scale = 1.0 / (n - 1);
  for (int i = 0; i < m; ++i) {
    r(i, i) = i < basis.symmetric_count() ? scale : -scale;
  }
  return r;
}

TransformPair ppt_as_gamma(PptSubset which, const std::array<int, 2>& dims) {
  if (dims[0] != 2 || dims[1] != 2) {
    throw std::invalid_argument("ppt_as_gamma: both small subsystems must be 2");
  }
  const RealMatrix flip = transpose_diagonal(2);  // diag(1, 1, -1)
  const RealMatrix id = RealMatrix::Identity(3, 3);
  TransformPair t;
  t.dims = dims;
  switch (which) {
    case PptSubset::A:
      t.R1 = flip;
      t.R2 = id;
      break;
    case PptSubset::B:
      t.R1 = id;
      t.R2 = flip;
      break;
    case PptSubset::AB:
      t.R1 = flip;
      t.R2 = flip;
      break;
  }
  return t;
}

}  // namespace blochsep
