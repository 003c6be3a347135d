#include "eurbound/oracle.hpp"

#include "eurbound/maxprob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace eur {

namespace {

constexpr double kInvPhi = 0.6180339887498949;
constexpr int kStatesGroup = 64;
constexpr int kShortPolish = 25;

long block_count(long budget) {
  if (budget < 1) throw std::invalid_argument("oracle budget must be positive");
  return (budget + kOracleBlock - 1) / kOracleBlock;
}

std::mt19937_64 block_engine(std::uint64_t seed, long block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block)};
  return std::mt19937_64(seq);
}

// Golden-section minimum of g on [lo, hi]; returns (argmin, value).
template <typename G>
std::pair<double, double> golden(G&& g, double lo, double hi, double tolerance) {
  double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  while (hi - lo > tolerance) {
    if (f1 <= f2) {
      hi = x2, x2 = x1, f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1, x1 = x2, f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = g(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

// Polishes the factor x in each orthonormal basis: every component is first tried at
// zero (cusps of the entropies sit there), then line-searched along its real and
// imaginary directions within +-step. The step shrinks geometrically and x is rescaled
// to unit norm after every sweep. Returns the number of sweeps performed.
template <typename F>
long line_refine(F&& f, ComplexMatrix& x, double& fx, const std::vector<ComplexMatrix>& bases,
                 int iterations) {
  const std::complex<double> units[] = {1.0, {0.0, 1.0}};
  double step = 0.5;
  long sweeps = 0;
  ComplexMatrix trial;
  for (; sweeps < iterations && step > 1e-11; ++sweeps, step *= 0.85) {
    for (const auto& basis : bases)
      for (Eigen::Index c = 0; c < x.cols(); ++c) {
        // The phase of each column is free; align it with the dominant component so
        // the real direction of the others follows the geodesics through it.
        Eigen::Index k = 0;
        const ComplexVector comp = basis.adjoint() * x.col(c);
        comp.cwiseAbs().maxCoeff(&k);
        if (std::abs(comp[k]) > 0.0) x.col(c) *= std::conj(comp[k]) / std::abs(comp[k]);
        for (Eigen::Index r = 0; r < basis.cols(); ++r) {
          trial = x;
          trial.col(c) -= basis.col(r).dot(x.col(c)) * basis.col(r);
          if (const double v = f(trial); v < fx) x = trial, fx = v;
          for (const auto unit : units) {
            const auto along = [&](double v) {
              trial = x;
              trial.col(c) += (v * unit) * basis.col(r);
              return f(trial);
            };
            const auto [v, value] = golden(along, -step, step, step * 1e-3);
            if (value < fx) {
              x.col(c) += (v * unit) * basis.col(r);
              fx = value;
            }
          }
        }
      }
    x /= x.norm();
  }
  return sweeps;
}

class MultisetBuffer {
 public:
  double entropy(const EntropySpec& spec, const Eigen::VectorXd& p) {
    terms_.resize(p.size());
    for (Eigen::Index k = 0; k < p.size(); ++k) terms_[k] = {std::max(p[k], 0.0), 1};
    return entropy_of_multiset(spec, terms_);
  }

 private:
  std::vector<WeightedValue> terms_;
};

// Uniform point of the scaled simplex {q >= 0, sum q = mass}, pushed into the box
// q <= cap by moving the excess onto the remaining room proportionally.
Eigen::VectorXd sample_capped_simplex(std::mt19937_64& rng, int size, double mass, double cap) {
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd q(size);
  for (int k = 0; k < size; ++k) q[k] = expo(rng);
  q *= mass / q.sum();
  double excess = 0.0, room = 0.0;
  for (int k = 0; k < size; ++k) {
    if (q[k] > cap) {
      excess += q[k] - cap;
      q[k] = cap;
    } else {
      room += cap - q[k];
    }
  }
  if (excess > 0.0 && room > 0.0)
    for (int k = 0; k < size; ++k)
      if (q[k] < cap) q[k] += excess * (cap - q[k]) / room;
  return q.cwiseMin(cap);
}

}  // namespace

OracleReport min_entropy_fixed_max(const EntropySpec& spec, double p, int n, long budget,
                                   std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (!(p <= 1.0 && p * n >= 1.0 - 1e-12))
    throw std::invalid_argument("max probability must lie in [1/N, 1]");
  const long blocks = block_count(budget);
  const int free = n - 1;
  const double mass = std::max(0.0, 1.0 - p);

  MultisetBuffer buffer;
  Eigen::VectorXd full(n);
  full[0] = p;
  const auto value_of = [&](const Eigen::VectorXd& q) {
    full.tail(free) = q;
    return buffer.entropy(spec, full);
  };

  OracleReport report;
  report.minimum_value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_q;
  for (long block = 0; block < blocks; ++block) {
    auto rng = block_engine(seed, block);
    Eigen::VectorXd q_best;
    double f_best = std::numeric_limits<double>::infinity();
    for (int s = 0; s < kOracleBlock; ++s) {
      Eigen::VectorXd q =
          free > 0 ? sample_capped_simplex(rng, free, mass, p) : Eigen::VectorXd(0);
      const double v = value_of(q);
      if (v < f_best) f_best = v, q_best = std::move(q);
    }
    report.samples_used += kOracleBlock;

    // Pairwise mass transfers: each pair (i, j) keeps q_i + q_j and moves q_i within
    // the box, trying both ends of the segment and a golden interior point.
    for (int sweep = 0; sweep < 200 && free > 1; ++sweep) {
      ++report.refinement_iterations;
      bool improved = false;
      for (int i = 0; i < free; ++i)
        for (int j = i + 1; j < free; ++j) {
          const double total = q_best[i] + q_best[j];
          const double lo = std::max(0.0, total - p), hi = std::min(p, total);
          const auto at = [&](double qi) {
            Eigen::VectorXd trial = q_best;
            trial[i] = qi;
            trial[j] = total - qi;
            return value_of(trial);
          };
          double arg = q_best[i], val = f_best;
          for (double cand : {lo, hi}) {
            const double v = at(cand);
            if (v < val) arg = cand, val = v;
          }
          if (hi - lo > 1e-12) {
            const auto [g, v] = golden(at, lo, hi, 1e-10);
            if (v < val) arg = g, val = v;
          }
          if (val < f_best - 1e-15) {
            q_best[i] = arg;
            q_best[j] = total - arg;
            f_best = val;
            improved = true;
          }
        }
      if (!improved) break;
    }
    if (f_best < report.minimum_value) report.minimum_value = f_best, best_q = q_best;
  }

  full.tail(free) = best_q;
  report.argmin = ProbabilityVector::normalized(full, 1e-9);
  report.minimum_value = std::max(report.minimum_value, 0.0);
  return report;
}

OracleReport min_entropy_sum_states(const EntropySpec& a, const EntropySpec& b,
                                    const UnitaryMatrix& t, Purity purity, long budget,
                                    std::uint64_t seed, int refinement_iterations) {
  const int n = t.dim();
  const long blocks = block_count(budget);
  const ComplexMatrix tt = t.matrix().transpose();  // (T^T psi)_j = <b_j|psi>
  MultisetBuffer buffer;
  Eigen::VectorXd pa(n), pb(n);

  // States are rays of a factor G: a vector for pure states, a square matrix with
  // rho = G G^dagger / Tr for mixed ones.
  // Column j of conj(T) is |b_j>, so the B-basis components of psi are (T^T psi)_j.
  const std::vector<ComplexMatrix> bases{ComplexMatrix::Identity(n, n), t.matrix().conjugate()};

  const auto objective = [&](const ComplexMatrix& g) {
    const double norm2 = g.squaredNorm();
    if (!(norm2 > 0.0)) return std::numeric_limits<double>::infinity();
    pa = g.rowwise().squaredNorm() / norm2;
    pb = (tt * g).rowwise().squaredNorm() / norm2;
    return buffer.entropy(a, pa) + buffer.entropy(b, pb);
  };

  OracleReport report;
  report.minimum_value = std::numeric_limits<double>::infinity();
  ComplexMatrix best_g;
  for (long block = 0; block < blocks; ++block) {
    QuantumSampler sampler(seed, static_cast<std::uint64_t>(block));
    // The landscape has several basins: the best sample of each group gets a short
    // polish, and only the best of those is polished to convergence.
    ComplexMatrix g_block;
    double f_block = std::numeric_limits<double>::infinity();
    for (int group = 0; group < kOracleBlock / kStatesGroup; ++group) {
      ComplexMatrix g_best;
      double f_best = std::numeric_limits<double>::infinity();
      for (int s = 0; s < kStatesGroup; ++s) {
        ComplexMatrix g = purity == Purity::Pure ? ComplexMatrix(sampler.haar_vector(n))
                                                 : sampler.gaussian(n, n);
        const double v = objective(g);
        if (v < f_best) f_best = v, g_best = std::move(g);
      }
      g_best /= g_best.norm();
      report.refinement_iterations +=
          line_refine(objective, g_best, f_best, bases, std::min(kShortPolish, refinement_iterations));
      if (f_best < f_block) f_block = f_best, g_block = std::move(g_best);
    }
    report.refinement_iterations +=
        line_refine(objective, g_block, f_block, bases, refinement_iterations);
    if (f_block < report.minimum_value) report.minimum_value = f_block, best_g = g_block;
    report.samples_used += kOracleBlock;
  }

  if (purity == Purity::Pure)
    report.argmin = ComplexVector(best_g.col(0) / best_g.norm());
  else
    report.argmin = ComplexMatrix(best_g * best_g.adjoint() / best_g.squaredNorm());
  report.minimum_value = std::max(report.minimum_value, 0.0);
  return report;
}

OracleReport min_sum_lp_grid(const EntropySpec& a, const EntropySpec& b, const OverlapTriplet& t,
                             int gridsize) {
  if (gridsize < 1) throw std::invalid_argument("grid size must be positive");
  const double cap_a = t.c_a() * t.c_a(), cap_b = t.c_b() * t.c_b();
  const double threshold = t.c_ab() * t.c_ab();
  OracleReport report;
  report.minimum_value = std::numeric_limits<double>::infinity();
  MaxProbabilityPair best{};
  for (int k = 1; k <= gridsize; ++k) {
    const double p_a = k == gridsize ? cap_a : cap_a * k / gridsize;
    const double p_b = p_a <= threshold ? cap_b : std::min(cap_b, g_c(t.c_ab(), p_a));
    const double v = h_min(a, p_a) + h_min(b, p_b);
    if (v < report.minimum_value) report.minimum_value = v, best = {p_a, p_b};
  }
  report.samples_used = gridsize;
  report.argmin = best;
  report.minimum_value = std::max(report.minimum_value, 0.0);
  return report;
}

std::vector<std::pair<ProbabilityVector, ProbabilityVector>> majorization_pairs(
    int n, int count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("majorization pairs need N >= 2");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> index(0, n - 1);
  std::uniform_int_distribution<int> moves(1, 2 * n);

  std::vector<std::pair<ProbabilityVector, ProbabilityVector>> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    Eigen::VectorXd q(n);
    for (int k = 0; k < n; ++k) q[k] = expo(rng);
    q /= q.sum();
    Eigen::VectorXd p = q;
    for (int m = moves(rng); m > 0; --m) {
      const int i = index(rng);
      int j = index(rng);
      if (j == i) j = (i + 1) % n;
      const double lambda = unit(rng);
      const double pi = p[i], pj = p[j];
      p[i] = lambda * pi + (1.0 - lambda) * pj;
      p[j] = lambda * pj + (1.0 - lambda) * pi;
    }
    out.emplace_back(ProbabilityVector::normalized(p), ProbabilityVector::normalized(q));
  }
  return out;
}

}  // namespace eur
