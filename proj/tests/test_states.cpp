#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blochsep/detect.hpp"
#include "test_util.hpp"

using namespace blochsep;
using testutil::max_abs_diff;

TEST_CASE("isotropic family endpoints and shape") {
  auto mixed = isotropic(3, 0.0);
  CHECK(mixed.dims() == std::vector<int>{3, 1, 3});
  CHECK(max_abs_diff(mixed.matrix(), ComplexMatrix::Identity(9, 9) / 9.0) <
        1e-15);

  auto pure = isotropic(2, 1.0);
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(pure.matrix(), phi * phi.adjoint()) < 1e-15);

  // lowest admissible p keeps positivity, below it construction fails
  CHECK(min_eig(isotropic(3, -1.0 / 8.0).matrix()) >= -kPosTol);
  CHECK_THROWS_AS(isotropic(3, -0.2), std::invalid_argument);
  CHECK_THROWS_AS(isotropic(3, 1.1), std::invalid_argument);
}

TEST_CASE("isotropic PPT boundary sits at 1/(n+1)") {
  for (int n : {2, 3}) {
    const double cut = 1.0 / (n + 1);
    auto below = ppt_check(isotropic(n, cut - 1e-3));
    auto above = ppt_check(isotropic(n, cut + 1e-3));
    for (const auto& e : below) CHECK(e.min_eigenvalue >= -kPosTol);
    bool negative = false;
    for (const auto& e : above) negative |= e.min_eigenvalue < -kNegMargin;
    CHECK(negative);
  }
}

TEST_CASE("ghz_mixed endpoints and marginals") {
  auto g = ghz_mixed(3, 1.0);
  CHECK(g.dims() == std::vector<int>{3, 3, 3});
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(27);
  v(0) = v(13) = v(26) = 1.0 / std::sqrt(3.0);
  CHECK(max_abs_diff(g.matrix(), v * v.adjoint()) < 1e-15);

  // single-party marginal of the pure GHZ state is maximally mixed
  CHECK(max_abs_diff(partial_trace(g, {0}),
                     ComplexMatrix::Identity(3, 3) / 3.0) < 1e-14);
  CHECK_THROWS_AS(ghz_mixed(3, 1.5), std::invalid_argument);
}

TEST_CASE("random_density is a valid state and seed-deterministic") {
  auto a = random_density({2, 3}, 7);
  auto b = random_density({2, 3}, 7);
  auto c = random_density({2, 3}, 8);
  CHECK(max_abs_diff(a.matrix(), b.matrix()) == 0.0);
  CHECK(max_abs_diff(a.matrix(), c.matrix()) > 1e-3);
  CHECK(std::abs(a.matrix().trace() - Complex(1, 0)) < 1e-12);
  CHECK(min_eig(a.matrix()) >= -kPosTol);
}

TEST_CASE("random_separable assembles to its ensemble") {
  std::uint64_t seed = 40;
  for (const auto& dims :
       std::vector<std::vector<int>>{{2, 2, 2}, {3, 3, 2}, {2, 4}}) {
    auto [rho, ens] = random_separable(dims, 10, seed++);
    CHECK(max_abs_diff(rho.matrix(), ens.assemble()) < 1e-12);
    CHECK(ens.weights.size() == 10);
    double wsum = 0.0;
    for (double w : ens.weights) {
      CHECK(w > 0.0);
      wsum += w;
    }
    CHECK(std::abs(wsum - 1.0) < 1e-12);
    // pure product terms carry full-length Bloch vectors
    const double norm_a = std::sqrt(2.0 * (1.0 - 1.0 / dims[0]));
    for (const auto& v : ens.a) CHECK(v.norm() == doctest::Approx(norm_a));
  }
  CHECK_THROWS_AS(random_separable({2, 2, 2}, 0, 1), std::invalid_argument);
}

TEST_CASE("induced_bloch matches decompose on the assembled state") {
  std::uint64_t seed = 60;
  for (const auto& dims :
       std::vector<std::vector<int>>{{2, 2, 3}, {3, 3, 3}, {3, 3}}) {
    auto [rho, ens] = random_separable(dims, 6, seed++);
    auto direct = decompose(rho);
    auto induced = ens.induced_bloch();
    CHECK(max_abs_diff(direct.M0, induced.M0) < 1e-12);
    for (size_t i = 0; i < direct.M.size(); ++i)
      CHECK(max_abs_diff(direct.M[i], induced.M[i]) < 1e-12);
    for (size_t j = 0; j < direct.Mt.size(); ++j)
      CHECK(max_abs_diff(direct.Mt[j], induced.Mt[j]) < 1e-12);
    for (size_t i = 0; i < direct.Mij.size(); ++i)
      for (size_t j = 0; j < direct.Mij[i].size(); ++j)
        CHECK(max_abs_diff(direct.Mij[i][j], induced.Mij[i][j]) < 1e-12);
  }
}

TEST_CASE("bloch_vector inverts the generator expansion") {
  std::mt19937_64 rng(2);
  for (int n : {2, 3, 4}) {
    auto g = testutil::random_complex(n, n, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    auto coords = bloch_vector(rho);
    CHECK(coords.size() == n * n - 1);
    const auto& basis = generators(n).matrices;
    ComplexMatrix rebuilt = ComplexMatrix::Identity(n, n) / double(n);
    for (int i = 0; i < coords.size(); ++i)
      rebuilt += 0.5 * coords(i) * basis[i];
    CHECK(max_abs_diff(rebuilt, rho) < 1e-12);
  }
  // pure qubit states sit on the unit sphere
  ComplexMatrix up = ComplexMatrix::Zero(2, 2);
  up(0, 0) = 1.0;
  CHECK(bloch_vector(up).norm() == doctest::Approx(1.0));
}
