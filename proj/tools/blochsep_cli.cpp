// Command-line front end for the Bloch-representation separability toolbox.
//
// Exit codes: 0 = ok / inconclusive, 1 = error, 2 = entanglement certified
// (detect) or some partial transpose negative (ppt).

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "blochsep/io.hpp"

namespace {

using namespace blochsep;

DensityMatrix make_family(const std::string& family, int n, double p) {
  if (family == "isotropic") return isotropic(n, p);
  if (family == "ghz-mixed") return ghz_mixed(n, p);
  throw std::invalid_argument("unknown family: " + family +
                              " (expected isotropic or ghz-mixed)");
}

TransformPair default_pair(const DensityMatrix& rho) {
  const TripartiteBloch b = decompose(rho);
  TransformPair t;
  t.dims = {b.dims[0], b.dims[1]};
  t.R1 = transpose_diagonal(b.dims[0]);
  t.R2 = b.dims[1] > 1 ? transpose_diagonal(b.dims[1]) : RealMatrix(0, 0);
  return t;
}

int cmd_gen(const std::string& family, int n, double p,
            const std::string& out) {
  save_state(make_family(family, n, p), out);
  return 0;
}

int cmd_detect(const std::string& state_path, const std::string& strategy_name_,
               int samples, std::uint64_t seed, std::size_t budget,
               const std::string& out) {
  const DensityMatrix rho = load_state(state_path);
  SearchStrategy strategy;
  strategy.kind = strategy_from_name(strategy_name_);
  strategy.samples = samples;
  strategy.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  const DetectionReport rep = detect(rho, strategy, budget);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const TripartiteBloch b = decompose(rho);
  const nlohmann::json j = report_to_json(rep, {b.dims[0], b.dims[1]}, wall);
  std::cout << j.dump(1) << "\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write report: " + out);
    f << j.dump(1) << "\n";
  }
  return rep.verdict == Verdict::kEntangled ? 2 : 0;
}

int cmd_sweep(const std::string& family, int n, double from, double to,
              int steps, const std::string& out) {
  if (!(from < to) || steps < 2) {
    throw std::invalid_argument("sweep: need from < to and steps >= 2");
  }
  auto fam = [&](double p) { return make_family(family, n, p); };
  const TransformPair t = default_pair(fam(from));

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw std::runtime_error("cannot write sweep output: " + out);
    os = &file;
  }
  *os << "p,min_eig,verdict\n";
  double prev_p = 0.0, prev_f = 0.0;
  bool have_prev = false;
  std::vector<std::pair<double, double>> brackets;
  for (int i = 0; i < steps; ++i) {
    const double p = from + (to - from) * i / (steps - 1);
    const double f = gamma_min_eig(fam(p), t);
    *os << p << "," << f << ","
        << (f < -kNegMargin ? "ENTANGLED" : "INCONCLUSIVE") << "\n";
    if (have_prev && (prev_f >= 0) != (f >= 0)) brackets.emplace_back(prev_p, p);
    prev_p = p;
    prev_f = f;
    have_prev = true;
  }
  for (auto [lo, hi] : brackets) {
    if (auto cp = critical_parameter(fam, t, lo, hi, 1e-4)) {
      *os << "# threshold," << cp->value << "\n";
    }
  }
  return 0;
}

int cmd_ppt(const std::string& state_path, const std::string& subset) {
  const DensityMatrix rho = load_state(state_path);
  auto entries = ppt_check(rho);
  if (!subset.empty()) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const PptEntry& e) { return e.name == subset; });
    if (it == entries.end()) {
      throw std::invalid_argument("invalid subset for this state: " + subset);
    }
    entries = {*it};
  }
  bool negative = false;
  for (const auto& e : entries) {
    std::cout << e.name << " " << e.min_eigenvalue << "\n";
    if (e.min_eigenvalue < -kNegMargin) negative = true;
  }
  return negative ? 2 : 0;
}

int cmd_decompose(const std::string& state_path) {
  const DensityMatrix rho = load_state(state_path);
  const TripartiteBloch b = decompose(rho);
  std::cout << "dims " << b.dims[0] << " " << b.dims[1] << " " << b.dims[2]
            << "\n";
  std::cout << "M0 " << b.M0.norm() << "\n";
  for (size_t i = 0; i < b.M.size(); ++i) {
    std::cout << "M[" << i + 1 << "] " << b.M[i].norm() << "\n";
  }
  for (size_t j = 0; j < b.Mt.size(); ++j) {
    std::cout << "Mt[" << j + 1 << "] " << b.Mt[j].norm() << "\n";
  }
  for (size_t i = 0; i < b.Mij.size(); ++i) {
    for (size_t j = 0; j < b.Mij[i].size(); ++j) {
      std::cout << "Mij[" << i + 1 << "][" << j + 1 << "] "
                << b.Mij[i][j].norm() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bloch-representation entanglement detection"};
  app.require_subcommand(1);

  std::string family = "isotropic", state_path, out, subset;
  std::string strategy = "sign-diag";
  int dim = 3, steps = 101, samples = 50;
  double p = 0.0, from = 0.0, to = 1.0;
  std::uint64_t seed = 0;
  std::size_t budget = 65536;

  auto* gen = app.add_subcommand("gen", "write a state file for a family");
  gen->add_option("--family", family, "isotropic | ghz-mixed");
  gen->add_option("--dim", dim, "subsystem dimension");
  gen->add_option("--p", p, "mixing parameter")->required();
  gen->add_option("--out", out, "output path")->required();

  auto* det = app.add_subcommand("detect", "search for an entanglement witness");
  det->add_option("--state", state_path, "state file")->required();
  det->add_option("--strategy", strategy, "sign-diag | random | refine");
  det->add_option("--samples", samples, "samples / refinement steps");
  det->add_option("--seed", seed, "RNG seed");
  det->add_option("--budget", budget, "sign-diagonal candidate budget");
  det->add_option("--out", out, "also write the report here");

  auto* sweep = app.add_subcommand("sweep", "CSV sweep over a family parameter");
  sweep->add_option("--family", family, "isotropic | ghz-mixed");
  sweep->add_option("--dim", dim, "subsystem dimension");
  sweep->add_option("--from", from, "range start");
  sweep->add_option("--to", to, "range end");
  sweep->add_option("--steps", steps, "grid points");
  sweep->add_option("--out", out, "output path (default stdout)");

  auto* ppt = app.add_subcommand("ppt", "partial-transpose spectra");
  ppt->add_option("--state", state_path, "state file")->required();
  ppt->add_option("--subset", subset, "restrict to one subset (A, B, AB, ...)");

  auto* dec = app.add_subcommand("decompose", "coefficient-operator norms");
  dec->add_option("--state", state_path, "state file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(family, dim, p, out);
    if (det->parsed())
      return cmd_detect(state_path, strategy, samples, seed, budget, out);
    if (sweep->parsed()) return cmd_sweep(family, dim, from, to, steps, out);
    if (ppt->parsed()) return cmd_ppt(state_path, subset);
    if (dec->parsed()) return cmd_decompose(state_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
