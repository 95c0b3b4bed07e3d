#include "blochsep/bloch.hpp"

#include <cmath>

namespace blochsep {

double inner_radius(int n) {
  if (n < 2) throw std::invalid_argument("inner_radius: n must be >= 2");
  return std::sqrt(2.0 / (n * (n - 1.0)));
}

double outer_radius(int n) {
  if (n < 2) throw std::invalid_argument("outer_radius: n must be >= 2");
  return std::sqrt(2.0 * (1.0 - 1.0 / n));
}

namespace {

std::array<int, 3> embedded_dims(const std::vector<int>& dims) {
  if (dims.size() == 3) return {dims[0], dims[1], dims[2]};
  return {dims[0], 1, dims[1]};  // bipartite: unit middle dimension
}

}  // namespace

TripartiteBloch decompose(const DensityMatrix& rho) {
  TripartiteBloch b;
  b.dims = embedded_dims(rho.dims());
  const int n1 = b.dims[0], n2 = b.dims[1], n3 = b.dims[2];
  const auto& g1 = generators(n1).matrices;
  const auto& g2 = generators(n2).matrices;
  const std::vector<int> dims3{n1, n2, n3};
  const std::vector<int> keep{2};
  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix i2 = ComplexMatrix::Identity(n2, n2);
  const ComplexMatrix i1 = ComplexMatrix::Identity(n1, n1);
  const ComplexMatrix i3 = ComplexMatrix::Identity(n3, n3);

  b.M0 = partial_trace(m, dims3, keep) / (n1 * n2);
  b.M.reserve(g1.size());
  for (const auto& la : g1) {
    b.M.push_back(partial_trace(kron(kron(la, i2), i3) * m, dims3, keep) /
                  (2.0 * n2));
  }
  b.Mt.reserve(g2.size());
  for (const auto& lb : g2) {
    b.Mt.push_back(partial_trace(kron(kron(i1, lb), i3) * m, dims3, keep) /
                   (2.0 * n1));
  }
  b.Mij.resize(g1.size());
  for (size_t i = 0; i < g1.size(); ++i) {
    b.Mij[i].reserve(g2.size());
    for (size_t j = 0; j < g2.size(); ++j) {
      b.Mij[i].push_back(
          partial_trace(kron(kron(g1[i], g2[j]), i3) * m, dims3, keep) / 4.0);
    }
  }
  return b;
}

ComplexMatrix reconstruct(const TripartiteBloch& b) {
  const int n1 = b.dims[0], n2 = b.dims[1], n3 = b.dims[2];
  const auto& g1 = generators(n1).matrices;
  const auto& g2 = generators(n2).matrices;
  if (b.M.size() != g1.size() || b.Mt.size() != g2.size() ||
      b.Mij.size() != g1.size()) {
    throw std::invalid_argument("reconstruct: coefficient count mismatch");
  }
  const ComplexMatrix i1 = ComplexMatrix::Identity(n1, n1);
  const ComplexMatrix i2 = ComplexMatrix::Identity(n2, n2);
  auto check_dim = [n3](const ComplexMatrix& op) {
    if (op.rows() != n3 || op.cols() != n3) {
      throw std::invalid_argument(
          "reconstruct: coefficient operator has wrong dimension");
    }
  };
  check_dim(b.M0);
  ComplexMatrix out = kron(kron(i1, i2), b.M0);
  for (size_t i = 0; i < g1.size(); ++i) {
    check_dim(b.M[i]);
    out += kron(kron(g1[i], i2), b.M[i]);
  }
  for (size_t j = 0; j < g2.size(); ++j) {
    check_dim(b.Mt[j]);
    out += kron(kron(i1, g2[j]), b.Mt[j]);
  }
  for (size_t i = 0; i < g1.size(); ++i) {
    if (b.Mij[i].size() != g2.size()) {
      throw std::invalid_argument("reconstruct: grid shape mismatch");
    }
    for (size_t j = 0; j < g2.size(); ++j) {
      check_dim(b.Mij[i][j]);
      out += kron(kron(g1[i], g2[j]), b.Mij[i][j]);
    }
  }
  return out;
}

Theorem1Result theorem1_check(const TripartiteBloch& b, const RealVector& r,
                              const RealVector& s) {
  const int m1 = static_cast<int>(b.M.size());
  const int m2 = static_cast<int>(b.Mt.size());
  if (r.size() != m1 || s.size() != m2) {
    throw std::invalid_argument("theorem1_check: vector length mismatch");
  }
  // The hypothesis only covers the closed inner balls.
  if (m1 > 0 && r.norm() > inner_radius(b.dims[0]) + 1e-12) {
    throw std::invalid_argument("theorem1_check: |r| exceeds the inner radius");
  }
  if (m2 > 0 && s.norm() > inner_radius(b.dims[1]) + 1e-12) {
    throw std::invalid_argument("theorem1_check: |s| exceeds the inner radius");
  }
  ComplexMatrix op = b.M0;
  for (int i = 0; i < m1; ++i) op -= r(i) * b.M[i];
  for (int j = 0; j < m2; ++j) op -= s(j) * b.Mt[j];
  for (int i = 0; i < m1; ++i) {
    for (int j = 0; j < m2; ++j) op += r(i) * s(j) * b.Mij[i][j];
  }
  return {op, min_eig(op)};
}

}  // namespace blochsep
