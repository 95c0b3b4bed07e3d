#include "blochsep/detect.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>

namespace blochsep {

namespace {

// Kronecker-lifted coefficient basis of one decomposition: the full-space
// matrices multiplying 1, d1_i, d2_j and d1_i*d2_j in a sign-diagonal
// candidate.
struct LiftedBasis {
  ComplexMatrix t0;
  std::vector<ComplexMatrix> a;                // per first-subsystem index
  std::vector<ComplexMatrix> b;                // per second-subsystem index
  std::vector<std::vector<ComplexMatrix>> c;   // grid
  int m1 = 0, m2 = 0;

  explicit LiftedBasis(const TripartiteBloch& bl) {
    const int n1 = bl.dims[0], n2 = bl.dims[1];
    const auto& g1 = generators(n1).matrices;
    const auto& g2 = generators(n2).matrices;
    m1 = static_cast<int>(g1.size());
    m2 = static_cast<int>(g2.size());
    const ComplexMatrix i1 = ComplexMatrix::Identity(n1, n1);
    const ComplexMatrix i2 = ComplexMatrix::Identity(n2, n2);
    t0 = kron(kron(i1, i2), bl.M0);
    for (int i = 0; i < m1; ++i) a.push_back(kron(kron(g1[i], i2), bl.M[i]));
    for (int j = 0; j < m2; ++j) b.push_back(kron(kron(i1, g2[j]), bl.Mt[j]));
    c.resize(m1);
    for (int i = 0; i < m1; ++i) {
      for (int j = 0; j < m2; ++j) {
        c[i].push_back(kron(kron(g1[i], g2[j]), bl.Mij[i][j]));
      }
    }
  }
};

// Walks sign-diagonal pairs in Gray-code order, maintaining the candidate
// matrix incrementally (one sign flip per step). Rebuilt from scratch every
// 256 steps to keep rounding drift far below kPosTol.
class SignDiagonalScan {
 public:
  SignDiagonalScan(const LiftedBasis& basis, double s1, double s2)
      : basis_(basis), d1_(basis.m1, s1), d2_(basis.m2, s2) {
    rebuild();
  }

  const ComplexMatrix& matrix() const { return m_; }
  const std::vector<double>& d1() const { return d1_; }
  const std::vector<double>& d2() const { return d2_; }

  // Advances from candidate k to k+1 (Gray neighbor).
  void advance(std::uint64_t next_index) {
    const int bit = std::countr_zero(next_index);
    if (bit < basis_.m1) {
      const int i = bit;
      m_ += (-2.0 * d1_[i]) * (basis_.a[i] + v_[i]);
      d1_[i] = -d1_[i];
    } else {
      const int j = bit - basis_.m1;
      ComplexMatrix col = basis_.b[j];
      for (int i = 0; i < basis_.m1; ++i) col += d1_[i] * basis_.c[i][j];
      m_ += (-2.0 * d2_[j]) * col;
      for (int i = 0; i < basis_.m1; ++i) {
        v_[i] += (-2.0 * d2_[j]) * basis_.c[i][j];
      }
      d2_[j] = -d2_[j];
    }
    if (++steps_since_rebuild_ >= 256) rebuild();
  }

 private:
  void rebuild() {
    v_.assign(basis_.m1, ComplexMatrix::Zero(basis_.t0.rows(), basis_.t0.cols()));
    for (int i = 0; i < basis_.m1; ++i) {
      for (int j = 0; j < basis_.m2; ++j) v_[i] += d2_[j] * basis_.c[i][j];
    }
    m_ = basis_.t0;
    for (int j = 0; j < basis_.m2; ++j) m_ += d2_[j] * basis_.b[j];
    for (int i = 0; i < basis_.m1; ++i) m_ += d1_[i] * (basis_.a[i] + v_[i]);
    steps_since_rebuild_ = 0;
  }

  const LiftedBasis& basis_;
  std::vector<double> d1_, d2_;
  std::vector<ComplexMatrix> v_;  // v_[i] = sum_j d2_j c_ij
  ComplexMatrix m_;
  int steps_since_rebuild_ = 0;
};

RealMatrix diag_of(const std::vector<double>& d) {
  RealMatrix r = RealMatrix::Zero(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) r(i, i) = d[i];
  return r;
}

// Positive-semidefiniteness screen; failures get an exact eigensolve.
bool certified_positive(const ComplexMatrix& m) {
  Eigen::LLT<ComplexMatrix> llt(m);
  return llt.info() == Eigen::Success;
}

struct Best {
  double value = std::numeric_limits<double>::infinity();
  bool present = false;
  TransformPair pair;
};

void consider(Best& best, double value, TransformPair pair) {
  // Strict improvement keeps the lowest candidate index on ties.
  if (!best.present || value < best.value) {
    best.value = value;
    best.pair = std::move(pair);
    best.present = true;
  }
}

TransformPair empty_pair(int n1, int n2) {
  TransformPair t;
  t.dims = {n1, n2};
  t.R1 = RealMatrix::Zero(n1 * n1 - 1, n1 * n1 - 1);
  t.R2 = RealMatrix::Zero(n2 > 1 ? n2 * n2 - 1 : 0, n2 > 1 ? n2 * n2 - 1 : 0);
  return t;
}

double eval_pair(const TripartiteBloch& b, const TransformPair& t) {
  return min_eig(reconstruct(apply_gamma(b, t)));
}

}  // namespace

std::vector<RealMatrix> enumerate_sign_diagonals(int n) {
  if (n < 2 || n > 3) {
    throw std::invalid_argument(
        "enumerate_sign_diagonals: exhaustive mode covers n in {2, 3}");
  }
  const int m = n * n - 1;
  const double s = 1.0 / (n - 1);
  std::vector<RealMatrix> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    RealMatrix r = RealMatrix::Zero(m, m);
    for (int i = 0; i < m; ++i) r(i, i) = ((mask >> i) & 1) ? -s : s;
    out.push_back(std::move(r));
  }
  return out;
}

RealMatrix random_contraction(int n, std::mt19937_64& rng) {
  const int m = n * n - 1;
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0 / (n - 1));
  RealMatrix g(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) g(i, j) = gauss(rng);
  }
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  RealMatrix d = RealMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) d(i, i) = uni(rng);
  return q * d;
}

RealMatrix random_contraction(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_contraction(n, rng);
}

namespace {

RealMatrix clamp_to_constraint(const RealMatrix& r, int n) {
  if (r.size() == 0) return r;
  Eigen::JacobiSVD<RealMatrix> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RealVector sv = svd.singularValues();
  const double bound = 1.0 / (n - 1);
  for (int i = 0; i < sv.size(); ++i) sv(i) = std::min(sv(i), bound);
  return svd.matrixU() * sv.asDiagonal() * svd.matrixV().transpose();
}

}  // namespace

TransformPair local_refine(const DensityMatrix& rho, const TransformPair& start,
                           int steps, std::uint64_t seed) {
  require_valid(start);
  const TripartiteBloch b = decompose(rho);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  TransformPair cur = start;
  double f = eval_pair(b, cur);
  const bool has_r2 = cur.R2.size() > 0;
  for (int s = 0; s < steps; ++s) {
    TransformPair prop = cur;
    const bool pick_r2 = has_r2 && (rng() & 1);
    RealMatrix& block = pick_r2 ? prop.R2 : prop.R1;
    const int n = pick_r2 ? prop.dims[1] : prop.dims[0];
    const int m = static_cast<int>(block.rows());
    const int i = static_cast<int>(rng() % m);
    const int j = static_cast<int>(rng() % m);
    block(i, j) += gauss(rng) * 0.25 / (n - 1);
    block = clamp_to_constraint(block, n);
    const double fp = eval_pair(b, prop);
    if (fp < f) {
      f = fp;
      cur = std::move(prop);
    }
  }
  return cur;
}

DetectionReport detect(const DensityMatrix& rho, const SearchStrategy& strategy,
                       std::size_t budget) {
  if (strategy.samples < 1) {
    throw std::invalid_argument("detect: samples must be >= 1");
  }
  if (budget < 1) {
    throw std::invalid_argument("detect: budget must be >= 1");
  }
  const TripartiteBloch b = decompose(rho);
  const int n1 = b.dims[0];
  const int n2 = b.dims[1];

  DetectionReport rep;
  rep.strategy = strategy;
  rep.seed = strategy.seed;

  Best best;
  double min_seen = std::numeric_limits<double>::infinity();

  if (strategy.kind == StrategyKind::kSignDiagonal) {
    const LiftedBasis basis(b);
    const int bits = basis.m1 + basis.m2;
    std::uint64_t count = budget;
    if (bits < 63 && (std::uint64_t{1} << bits) < count) {
      count = std::uint64_t{1} << bits;
    }
    const double s1 = 1.0 / (n1 - 1);
    const double s2 = n2 > 1 ? 1.0 / (n2 - 1) : 0.0;
    SignDiagonalScan scan(basis, s1, s2);
    for (std::uint64_t k = 0; k < count; ++k) {
      if (k > 0) scan.advance(k);
      if (k == 0 || !certified_positive(scan.matrix())) {
        const double value = min_eig(scan.matrix());
        min_seen = std::min(min_seen, value);
        if (value < best.value) {
          TransformPair t;
          t.dims = {n1, n2};
          t.R1 = diag_of(scan.d1());
          t.R2 = diag_of(scan.d2());
          consider(best, value, std::move(t));
        }
      }
    }
    rep.candidates_tested = count;
  } else if (strategy.kind == StrategyKind::kRandomOrthogonal) {
    std::mt19937_64 rng(strategy.seed);
    for (int s = 0; s < strategy.samples; ++s) {
      TransformPair t = empty_pair(n1, n2);
      t.R1 = random_contraction(n1, rng);
      if (n2 > 1) t.R2 = random_contraction(n2, rng);
      const double value = eval_pair(b, t);
      min_seen = std::min(min_seen, value);
      consider(best, value, std::move(t));
    }
    rep.candidates_tested = static_cast<std::size_t>(strategy.samples);
  } else {  // kLocalRefine
    std::mt19937_64 rng(strategy.seed);
    const int starts = std::min(strategy.samples, 8);
    Best start_best;
    for (int s = 0; s < starts; ++s) {
      TransformPair t = empty_pair(n1, n2);
      t.R1 = random_contraction(n1, rng);
      if (n2 > 1) t.R2 = random_contraction(n2, rng);
      const double value = eval_pair(b, t);
      consider(start_best, value, std::move(t));
    }
    TransformPair refined =
        local_refine(rho, start_best.pair, strategy.samples, strategy.seed + 1);
    const double value = eval_pair(b, refined);
    min_seen = std::min({min_seen, start_best.value, value});
    consider(best, start_best.value, start_best.pair);
    consider(best, value, std::move(refined));
    rep.candidates_tested = static_cast<std::size_t>(starts + 1);
  }

  rep.min_eigenvalue = min_seen;
  if (best.present && best.value < -kNegMargin) {
    rep.verdict = Verdict::kEntangled;
    rep.witness = best.pair;
    rep.min_eigenvalue = best.value;
  }
  return rep;
}

std::optional<CriticalParameter> critical_parameter(
    const std::function<DensityMatrix(double)>& family, const TransformPair& t,
    double lo, double hi, double tol) {
  if (!(lo < hi) || tol <= 0.0) {
    throw std::invalid_argument("critical_parameter: bad interval or tol");
  }
  auto f = [&](double p) { return gamma_min_eig(family(p), t); };

  constexpr int kScan = 16;
  std::array<double, kScan> values{};
  for (int i = 0; i < kScan; ++i) {
    values[i] = f(lo + (hi - lo) * i / (kScan - 1));
  }
  CriticalParameter out;
  bool increasing = true, decreasing = true;
  for (int i = 1; i < kScan; ++i) {
    if ((values[i - 1] >= 0) != (values[i] >= 0)) ++out.sign_changes;
    if (values[i] > values[i - 1] + 1e-14) decreasing = false;
    if (values[i] < values[i - 1] - 1e-14) increasing = false;
  }
  out.monotone = increasing || decreasing;
  if (out.sign_changes == 0) return std::nullopt;

  // Bisect the first bracketed sign change.
  double a = lo, fa = values[0];
  for (int i = 1; i < kScan; ++i) {
    const double p = lo + (hi - lo) * i / (kScan - 1);
    if ((fa >= 0) != (values[i] >= 0)) {
      double bp = p;
      while (bp - a > tol) {
        const double mid = 0.5 * (a + bp);
        const double fm = f(mid);
        if ((fm >= 0) == (fa >= 0)) {
          a = mid;
          fa = fm;
        } else {
          bp = mid;
        }
      }
      out.value = 0.5 * (a + bp);
      return out;
    }
    a = p;
    fa = values[i];
  }
  return std::nullopt;  // unreachable
}

std::vector<PptEntry> ppt_check(const DensityMatrix& rho) {
  const int parties = static_cast<int>(rho.dims().size());
  static const char* kNames = "ABC";
  std::vector<PptEntry> out;
  for (int mask = 1; mask < (1 << parties) - 1; ++mask) {
    PptEntry e;
    for (int k = 0; k < parties; ++k) {
      if (mask & (1 << k)) {
        e.subset.push_back(k);
        e.name += kNames[k];
      }
    }
    e.min_eigenvalue = min_eig(partial_transpose(rho, e.subset));
    out.push_back(std::move(e));
  }
  // Canonical order: by subset size, then lexicographic (A, B, C, AB, ...).
  std::stable_sort(out.begin(), out.end(),
                   [](const PptEntry& x, const PptEntry& y) {
                     return x.subset.size() < y.subset.size();
                   });
  return out;
}

}  // namespace blochsep
