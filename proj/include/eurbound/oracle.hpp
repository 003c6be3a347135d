#pragma once

#include "eurbound/entropy.hpp"
#include "eurbound/landau_pollak.hpp"
#include "eurbound/quantum.hpp"

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace eur {

/// Brute-force minimizers used to cross-check the closed forms. They sample and
/// polish locally, so their minima can only sit above the true minimum.
///
/// Budgets are consumed in blocks of kOracleBlock samples. Each block seeds its own
/// generator from (seed, block index) and polishes its own best sample, so a larger
/// budget only adds blocks and never raises the reported minimum.
inline constexpr int kOracleBlock = 1024;

struct MaxProbabilityPair {
  double p_a;
  double p_b;
};

using OracleArgmin = std::variant<std::monostate, ProbabilityVector, ComplexVector, ComplexMatrix,
                                  MaxProbabilityPair>;

struct OracleReport {
  double minimum_value = 0.0;
  OracleArgmin argmin;
  long samples_used = 0;
  long refinement_iterations = 0;
};

/// min H(p) over p in the N-simplex with max_k p_k = P. Throws for P outside [1/N, 1].
OracleReport min_entropy_fixed_max(const EntropySpec& spec, double p, int n, long budget,
                                   std::uint64_t seed);

/// min over states of H_A(p(A, rho)) + H_B(p(B, rho)) with A the computational basis
/// and B the basis with <b_j|a_i> = T_ij. Pure argmin is the state vector, mixed the
/// density matrix.
OracleReport min_entropy_sum_states(const EntropySpec& a, const EntropySpec& b,
                                    const UnitaryMatrix& t, Purity purity, long budget,
                                    std::uint64_t seed, int refinement_iterations = 200);

/// min of h_min(A, P_A) + h_min(B, P_B) over the Landau-Pollak domain, scanning
/// P_A on `gridsize` points of (0, c_A^2] and taking the largest admissible P_B.
OracleReport min_sum_lp_grid(const EntropySpec& a, const EntropySpec& b, const OverlapTriplet& t,
                             int gridsize);

/// Pairs (p, q) with p majorized by q: q uniform on the simplex, p from q by a
/// random sequence of T-transforms.
std::vector<std::pair<ProbabilityVector, ProbabilityVector>> majorization_pairs(int n, int count,
                                                                                std::uint64_t seed);

}  // namespace eur
