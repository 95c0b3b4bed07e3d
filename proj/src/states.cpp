#include "blochsep/states.hpp"

#include <iostream>
#include <random>

namespace blochsep {

DensityMatrix isotropic(int n, double p) {
  if (n < 2) throw std::invalid_argument("isotropic: n must be >= 2");
  const double lo = -1.0 / (n * n - 1.0);
  if (p < lo - 1e-12 || p > 1.0 + 1e-12) {
    throw std::invalid_argument("isotropic: p outside [-1/(n^2-1), 1]");
  }
  if (p < 0.0) {
    std::cerr << "isotropic: warning, negative mixing parameter p = " << p
              << "\n";
  }
  const int d = n * n;
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(d);
  for (int i = 0; i < n; ++i) phi(i * n + i) = 1.0 / std::sqrt(double(n));
  ComplexMatrix mat = (1.0 - p) / d * ComplexMatrix::Identity(d, d) +
                      p * (phi * phi.adjoint());
  return DensityMatrix::make({n, 1, n}, std::move(mat));
}

DensityMatrix ghz_mixed(int n, double p) {
  if (n < 2) throw std::invalid_argument("ghz_mixed: n must be >= 2");
  if (p < 0.0 || p > 1.0 + 1e-12) {
    throw std::invalid_argument("ghz_mixed: p outside [0, 1]");
  }
  const int d = n * n * n;
  Eigen::VectorXcd ghz = Eigen::VectorXcd::Zero(d);
  for (int i = 0; i < n; ++i) {
    ghz(i * n * n + i * n + i) = 1.0 / std::sqrt(double(n));
  }
  ComplexMatrix mat = (1.0 - p) / d * ComplexMatrix::Identity(d, d) +
                      p * (ghz * ghz.adjoint());
  return DensityMatrix::make({n, n, n}, std::move(mat));
}

namespace {

Eigen::VectorXcd random_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

}  // namespace

DensityMatrix random_density(const std::vector<int>& dims,
                             std::uint64_t seed) {
  long d = 1;
  for (int x : dims) d *= x;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  ComplexMatrix mat = g * g.adjoint();
  mat /= mat.trace().real();
  mat = ((mat + mat.adjoint()) / 2.0).eval();  // scrub rounding asymmetry
  return DensityMatrix::make(dims, std::move(mat));
}

RealVector bloch_vector(const ComplexMatrix& rho) {
  const int n = static_cast<int>(rho.rows());
  const auto& basis = generators(n).matrices;
  RealVector coords(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    coords(static_cast<int>(i)) = (rho * basis[i]).trace().real();
  }
  return coords;
}

ComplexMatrix SeparableEnsemble::assemble() const {
  long d = 1;
  for (int x : dims) d *= x;
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (size_t t = 0; t < weights.size(); ++t) {
    Eigen::VectorXcd psi = factors[t][0];
    for (size_t k = 1; k < factors[t].size(); ++k) {
      Eigen::VectorXcd next(psi.size() * factors[t][k].size());
      for (long i = 0; i < psi.size(); ++i) {
        next.segment(i * factors[t][k].size(), factors[t][k].size()) =
            psi(i) * factors[t][k];
      }
      psi = std::move(next);
    }
    out += weights[t] * (psi * psi.adjoint());
  }
  return out;
}

TripartiteBloch SeparableEnsemble::induced_bloch() const {
  const bool tripartite = dims.size() == 3;
  const int n1 = dims[0];
  const int n2 = tripartite ? dims[1] : 1;
  const int n3 = tripartite ? dims[2] : dims[1];
  const int m1 = n1 * n1 - 1;
  const int m2 = n2 * n2 - 1;
  const int third = tripartite ? 2 : 1;

  TripartiteBloch out;
  out.dims = {n1, n2, n3};
  out.M0 = ComplexMatrix::Zero(n3, n3);
  out.M.assign(m1, ComplexMatrix::Zero(n3, n3));
  out.Mt.assign(m2, ComplexMatrix::Zero(n3, n3));
  out.Mij.assign(m1, std::vector<ComplexMatrix>(m2, ComplexMatrix::Zero(n3, n3)));
  for (size_t t = 0; t < weights.size(); ++t) {
    const ComplexMatrix proj =
        factors[t][third] * factors[t][third].adjoint();
    out.M0 += weights[t] / (n1 * n2) * proj;
    for (int k = 0; k < m1; ++k) {
      out.M[k] += weights[t] * a[t](k) / (2.0 * n2) * proj;
    }
    for (int l = 0; l < m2; ++l) {
      out.Mt[l] += weights[t] * b[t](l) / (2.0 * n1) * proj;
    }
    for (int k = 0; k < m1; ++k) {
      for (int l = 0; l < m2; ++l) {
        out.Mij[k][l] += weights[t] * a[t](k) * b[t](l) / 4.0 * proj;
      }
    }
  }
  return out;
}

std::pair<DensityMatrix, SeparableEnsemble> random_separable(
    const std::vector<int>& dims, int terms, std::uint64_t seed) {
  if (terms < 1 || terms > 64) {
    throw std::invalid_argument("random_separable: terms must be in [1, 64]");
  }
  if (dims.size() != 2 && dims.size() != 3) {
    throw std::invalid_argument("random_separable: need 2 or 3 subsystems");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  SeparableEnsemble ens;
  ens.dims = dims;
  double total = 0.0;
  for (int t = 0; t < terms; ++t) {
    ens.weights.push_back(uni(rng) + 1e-3);
    total += ens.weights.back();
  }
  for (double& w : ens.weights) w /= total;
  for (int t = 0; t < terms; ++t) {
    std::vector<Eigen::VectorXcd> fac;
    for (int d : dims) fac.push_back(random_unit_vector(d, rng));
    ens.a.push_back(bloch_vector(fac[0] * fac[0].adjoint()));
    if (dims.size() == 3 && dims[1] > 1) {
      ens.b.push_back(bloch_vector(fac[1] * fac[1].adjoint()));
    } else {
      ens.b.push_back(RealVector(0));
    }
    ens.factors.push_back(std::move(fac));
  }
  ComplexMatrix mat = ens.assemble();
  mat = ((mat + mat.adjoint()) / 2.0).eval();
  return {DensityMatrix::make(dims, std::move(mat)), std::move(ens)};
}

}  // namespace blochsep
