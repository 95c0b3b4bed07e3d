#include "blochsep/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace blochsep {

using nlohmann::json;

nlohmann::json state_to_json(const DensityMatrix& rho) {
  json j;
  j["dims"] = rho.dims();
  json rows = json::array();
  const ComplexMatrix& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

DensityMatrix state_from_json(const nlohmann::json& j) {
  const std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  long d = 1;
  for (int x : dims) d *= x;
  const json& rows = j.at("matrix");
  if (!rows.is_array() || static_cast<long>(rows.size()) != d) {
    throw std::invalid_argument("state file: matrix row count mismatch");
  }
  ComplexMatrix m(d, d);
  for (long r = 0; r < d; ++r) {
    const json& row = rows.at(r);
    if (!row.is_array() || static_cast<long>(row.size()) != d) {
      throw std::invalid_argument("state file: matrix column count mismatch");
    }
    for (long c = 0; c < d; ++c) {
      const json& e = row.at(c);
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("state file: entry is not a [re, im] pair");
      }
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return DensityMatrix::make(dims, std::move(m));
}

DensityMatrix load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path);
  json j;
  in >> j;
  return state_from_json(j);
}

void save_state(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write state file: " + path);
  out << state_to_json(rho).dump(1) << "\n";
}

std::string strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kSignDiagonal:
      return "sign-diag";
    case StrategyKind::kRandomOrthogonal:
      return "random";
    case StrategyKind::kLocalRefine:
      return "refine";
  }
  return "?";
}

StrategyKind strategy_from_name(const std::string& name) {
  if (name == "sign-diag") return StrategyKind::kSignDiagonal;
  if (name == "random") return StrategyKind::kRandomOrthogonal;
  if (name == "refine") return StrategyKind::kLocalRefine;
  throw std::invalid_argument("unknown strategy: " + name);
}

namespace {

json real_matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix real_matrix_from_json(const json& j) {
  const long rows = static_cast<long>(j.size());
  RealMatrix m(rows, rows == 0 ? 0 : static_cast<long>(j.at(0).size()));
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < m.cols(); ++c) m(r, c) = j.at(r).at(c).get<double>();
  }
  return m;
}

}  // namespace

nlohmann::json report_to_json(const DetectionReport& rep,
                              const std::array<int, 2>& dims,
                              double wall_time_s) {
  json j;
  j["verdict"] =
      rep.verdict == Verdict::kEntangled ? "ENTANGLED" : "INCONCLUSIVE";
  j["min_eigenvalue"] = rep.min_eigenvalue;
  j["strategy"] = strategy_name(rep.strategy.kind);
  j["samples"] = rep.strategy.samples;
  j["seed"] = rep.seed;
  j["candidates_tested"] = rep.candidates_tested;
  j["version"] = kToolVersion;
  j["wall_time_s"] = wall_time_s;
  if (rep.witness) {
    json w;
    w["dims"] = {dims[0], dims[1]};
    w["R1"] = real_matrix_to_json(rep.witness->R1);
    w["R2"] = real_matrix_to_json(rep.witness->R2);
    j["witness"] = std::move(w);
  }
  return j;
}

DetectionReport report_from_json(const nlohmann::json& j) {
  DetectionReport rep;
  rep.verdict = j.at("verdict").get<std::string>() == "ENTANGLED"
                    ? Verdict::kEntangled
                    : Verdict::kInconclusive;
  rep.min_eigenvalue = j.at("min_eigenvalue").get<double>();
  rep.strategy.kind = strategy_from_name(j.at("strategy").get<std::string>());
  rep.strategy.samples = j.at("samples").get<int>();
  rep.strategy.seed = j.at("seed").get<std::uint64_t>();
  rep.seed = rep.strategy.seed;
  rep.candidates_tested = j.at("candidates_tested").get<std::size_t>();
  if (j.contains("witness")) {
    const json& w = j.at("witness");
    TransformPair t;
    t.dims = {w.at("dims").at(0).get<int>(), w.at("dims").at(1).get<int>()};
    t.R1 = real_matrix_from_json(w.at("R1"));
    t.R2 = real_matrix_from_json(w.at("R2"));
    rep.witness = std::move(t);
  }
  return rep;
}

}  // namespace blochsep
