// Acceptance gate: one criterion per invocation, selected by argv[1] (1-7).
// Prints a single [PASS]/[FAIL] line with the measured quantities and exits
// 0 on pass, 1 on fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "blochsep/io.hpp"

using namespace blochsep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

TransformPair diagonal_pair(int n1, int n2) {
  TransformPair t;
  t.dims = {n1, n2};
  t.R1 = transpose_diagonal(n1);
  t.R2 = n2 > 1 ? transpose_diagonal(n2) : RealMatrix(0, 0);
  return t;
}

Outcome family_onset(const std::function<DensityMatrix(double)>& family,
                     const TransformPair& t, double target, double tol,
                     double time_limit, Clock::time_point t0) {
  auto cp = critical_parameter(family, t, 0.02, 0.98, 1e-5);
  const double wall = seconds_since(t0);
  Outcome out;
  char buf[256];
  if (!cp) {
    std::snprintf(buf, sizeof buf, "no sign change found, %.2f s", wall);
    out.detail = buf;
    return out;
  }
  out.pass = std::abs(cp->value - target) <= tol && wall < time_limit;
  std::snprintf(buf, sizeof buf,
                "onset %.6f (target %.4f +- %.0e), %.2f s (limit %.0f s)",
                cp->value, target, tol, wall, time_limit);
  out.detail = buf;
  return out;
}

Outcome criterion1(Clock::time_point t0) {
  auto fam = [](double p) { return isotropic(3, p); };
  return family_onset(fam, diagonal_pair(3, 1), 0.500, 1e-3, 5.0, t0);
}

Outcome criterion2(Clock::time_point t0) {
  auto fam = [](double p) { return ghz_mixed(3, p); };
  return family_onset(fam, diagonal_pair(3, 3), 0.6248, 1e-3, 30.0, t0);
}

Outcome criterion3(Clock::time_point t0) {
  const std::vector<std::vector<int>> dim_sets = {
      {2, 2, 2}, {2, 2, 4}, {3, 3, 3}};
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto in_ball = [&](int len, double radius) {
    RealVector v(len);
    for (int i = 0; i < len; ++i) v(i) = gauss(rng);
    return (v * (radius * uni(rng) / v.norm())).eval();
  };
  std::uint64_t seed = 1;
  double worst = 0.0;
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    const auto& dims = dim_sets[k % dim_sets.size()];
    auto b = decompose(random_density(dims, seed++));
    const int m1 = dims[0] * dims[0] - 1;
    const int m2 = dims[1] * dims[1] - 1;
    for (int rep = 0; rep < 10; ++rep) {
      auto r = in_ball(m1, inner_radius(dims[0]));
      auto s = in_ball(m2, inner_radius(dims[1]));
      worst = std::min(worst, theorem1_check(b, r, s).min_eigenvalue);
      ++checked;
    }
  }
  const double wall = seconds_since(t0);
  Outcome out;
  out.pass = checked == 1000 && worst >= -1e-10 && wall < 60.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d checks, worst min_eig %.3e (floor -1e-10), %.2f s "
                "(limit 60 s)",
                checked, worst, wall);
  out.detail = buf;
  return out;
}

Outcome criterion4(Clock::time_point t0) {
  const std::vector<std::vector<int>> dim_sets = {
      {2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 3, 3}, {3, 3, 2},
      {3, 3, 3}, {2, 4},    {3, 3}};
  std::mt19937_64 term_rng(7);
  std::uint64_t seed = 4000;
  int false_positives = 0;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto& dims = dim_sets[k % dim_sets.size()];
    const int terms = 1 + static_cast<int>(term_rng() % 24);
    auto rho = random_separable(dims, terms, seed++).first;

    SearchStrategy exhaustive;
    exhaustive.kind = StrategyKind::kSignDiagonal;
    auto r1 = detect(rho, exhaustive, 65536);
    SearchStrategy random_strat;
    random_strat.kind = StrategyKind::kRandomOrthogonal;
    random_strat.samples = 50;
    random_strat.seed = seed;
    auto r2 = detect(rho, random_strat);

    if (r1.verdict == Verdict::kEntangled) ++false_positives;
    if (r2.verdict == Verdict::kEntangled) ++false_positives;
    worst = std::min({worst, r1.min_eigenvalue, r2.min_eigenvalue});
  }
  const double wall = seconds_since(t0);
  Outcome out;
  out.pass = false_positives == 0 && wall < 300.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "200 separable states, %d false ENTANGLED, worst min_eig "
                "%.3e, %.1f s (limit 300 s)",
                false_positives, worst, wall);
  out.detail = buf;
  return out;
}

Outcome criterion5(Clock::time_point t0) {
  std::uint64_t seed = 5000;
  double worst_err = 0.0;
  int agree = 0;
  SearchStrategy exhaustive;
  exhaustive.kind = StrategyKind::kSignDiagonal;
  const std::array<PptSubset, 3> which = {PptSubset::A, PptSubset::B,
                                          PptSubset::AB};
  const std::array<std::vector<int>, 3> subsets = {
      std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{0, 1}};
  for (int k = 0; k < 100; ++k) {
    auto rho = random_density({2, 2, 3}, seed++);
    auto b = decompose(rho);
    for (int w = 0; w < 3; ++w) {
      auto t = ppt_as_gamma(which[w], {2, 2});
      const double err = (reconstruct(apply_gamma(b, t)) -
                          partial_transpose(rho, subsets[w]))
                             .cwiseAbs()
                             .maxCoeff();
      worst_err = std::max(worst_err, err);
    }
    bool npt = false;
    for (const auto& e : ppt_check(rho)) npt |= e.min_eigenvalue < -kNegMargin;
    const bool flagged = detect(rho, exhaustive).verdict == Verdict::kEntangled;
    if (flagged == npt) ++agree;
  }
  const double wall = seconds_since(t0);
  Outcome out;
  out.pass = worst_err <= 1e-12 && agree == 100 && wall < 30.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "max transpose error %.3e (cap 1e-12), verdict/NPT agreement "
                "%d/100, %.2f s (limit 30 s)",
                worst_err, agree, wall);
  out.detail = buf;
  return out;
}

Outcome criterion6(Clock::time_point t0) {
  double worst_orto = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const auto& g = generators(n).matrices;
    for (size_t i = 0; i < g.size(); ++i) {
      for (size_t j = 0; j < g.size(); ++j) {
        const double want = i == j ? 2.0 : 0.0;
        worst_orto = std::max(
            worst_orto, std::abs((g[i] * g[j]).trace().real() - want));
        worst_orto =
            std::max(worst_orto, std::abs((g[i] * g[j]).trace().imag()));
      }
    }
  }
  const std::vector<std::vector<int>> dim_sets = {
      {2, 2, 2}, {2, 2, 4}, {3, 3, 3}, {3, 1, 3}, {2, 5}};
  std::uint64_t seed = 6000;
  double worst_rt = 0.0;
  for (int k = 0; k < 50; ++k) {
    auto rho = random_density(dim_sets[k % dim_sets.size()], seed++);
    worst_rt = std::max(worst_rt, (reconstruct(decompose(rho)) - rho.matrix())
                                      .cwiseAbs()
                                      .maxCoeff());
  }
  const double wall = seconds_since(t0);
  Outcome out;
  out.pass = worst_orto <= 1e-12 && worst_rt <= 1e-10 && wall < 10.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "orthogonality error %.3e (cap 1e-12), roundtrip error %.3e "
                "(cap 1e-10), %.2f s (limit 10 s)",
                worst_orto, worst_rt, wall);
  out.detail = buf;
  return out;
}

Outcome criterion7(Clock::time_point t0) {
  std::vector<std::pair<DensityMatrix, SearchStrategy>> jobs;
  SearchStrategy sd;
  sd.kind = StrategyKind::kSignDiagonal;
  SearchStrategy rnd;
  rnd.kind = StrategyKind::kRandomOrthogonal;
  rnd.samples = 60;
  rnd.seed = 17;
  SearchStrategy ref;
  ref.kind = StrategyKind::kLocalRefine;
  ref.samples = 40;
  ref.seed = 23;
  for (double p : {0.55, 0.75, 0.95}) jobs.emplace_back(isotropic(3, p), sd);
  jobs.emplace_back(ghz_mixed(2, 0.9), sd);
  jobs.emplace_back(isotropic(2, 0.9), rnd);
  jobs.emplace_back(isotropic(3, 0.8), ref);

  int entangled = 0;
  double worst_repro = 0.0;
  bool deterministic = true;
  for (const auto& [rho, strat] : jobs) {
    auto rep = detect(rho, strat);
    auto rep2 = detect(rho, strat);
    auto b = decompose(rho);
    nlohmann::json ja = report_to_json(rep, {b.dims[0], b.dims[1]}, 0.0);
    nlohmann::json jb = report_to_json(rep2, {b.dims[0], b.dims[1]}, 0.0);
    deterministic &= ja == jb;
    if (rep.verdict != Verdict::kEntangled) continue;
    ++entangled;
    auto back = report_from_json(ja);
    const double replay = gamma_min_eig(rho, *back.witness);
    worst_repro = std::max(worst_repro,
                           std::abs(replay - back.min_eigenvalue));
  }
  const double wall = seconds_since(t0);
  Outcome out;
  out.pass = entangled >= 4 && worst_repro <= 1e-10 && deterministic;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d certificates replayed, worst |min_eig drift| %.3e (cap "
                "1e-10), seeds %s, %.2f s",
                entangled, worst_repro,
                deterministic ? "deterministic" : "NON-DETERMINISTIC", wall);
  out.detail = buf;
  return out;
}

const char* kTitles[] = {
    "isotropic threshold",     "ghz-mixed threshold",
    "positivity property",     "separable soundness",
    "2x2xN transpose exactness", "basis and roundtrip",
    "certificate reproducibility"};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1-7>\n");
    return 1;
  }
  const int n = std::atoi(argv[1]);
  if (n < 1 || n > 7) {
    std::fprintf(stderr, "criterion out of range: %s\n", argv[1]);
    return 1;
  }
  const auto t0 = Clock::now();
  Outcome out;
  switch (n) {
    case 1: out = criterion1(t0); break;
    case 2: out = criterion2(t0); break;
    case 3: out = criterion3(t0); break;
    case 4: out = criterion4(t0); break;
    case 5: out = criterion5(t0); break;
    case 6: out = criterion6(t0); break;
    case 7: out = criterion7(t0); break;
  }
  std::printf("[%s] criterion %d (%s): %s\n", out.pass ? "PASS" : "FAIL", n,
              kTitles[n - 1], out.detail.c_str());
  return out.pass ? 0 : 1;
}
