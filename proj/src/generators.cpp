#include "blochsep/generators.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace blochsep {

GeneratorBasis build_generators(int n) {
  if (n < 2) {
    throw std::invalid_argument("build_generators: n must be >= 2");
  }
  GeneratorBasis basis;
  basis.n = n;
  basis.matrices.reserve(n * n - 1);
  const Complex im{0.0, 1.0};
  for (int l = 1; l <= n - 1; ++l) {
    ComplexMatrix w = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < l; ++i) w(i, i) = 1.0;
    w(l, l) = -static_cast<double>(l);
    w *= -std::sqrt(2.0 / (l * (l + 1.0)));
    basis.matrices.push_back(std::move(w));
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix u = ComplexMatrix::Zero(n, n);
      u(j, k) = 1.0;
      u(k, j) = 1.0;
      basis.matrices.push_back(std::move(u));
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix v = ComplexMatrix::Zero(n, n);
      v(j, k) = im;
      v(k, j) = -im;
      basis.matrices.push_back(std::move(v));
    }
  }
  return basis;
}

const GeneratorBasis& generators(int n) {
  static std::mutex mutex;
  static std::map<int, GeneratorBasis> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    GeneratorBasis basis;
    if (n == 1) {
      basis.n = 1;  // empty basis
    } else {
      basis = build_generators(n);
    }
    it = cache.emplace(n, std::move(basis)).first;
  }
  return it->second;
}

}  // namespace blochsep
