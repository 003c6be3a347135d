#pragma once

#include "eurbound/entropy.hpp"

#include <vector>

namespace eur {

/// Number of components pinned at P in the entropy-minimizing vector, floor(1/P).
/// 1/P within 1e-12 of an integer is snapped to that integer.
int pinned_count(double max_probability);

/// Minimal (h, phi)-entropy over probability vectors whose largest component is P:
/// h(floor(1/P) phi(P) + phi(1 - floor(1/P) P)). Independent of the dimension.
/// Throws std::invalid_argument unless 0 < P <= 1.
double h_min(const EntropySpec& spec, double max_probability);

/// The extreme point (P, ..., P, 1 - mP, 0, ..., 0) with m = floor(1/P), padded to n.
/// Throws std::invalid_argument when P < 1/n (no feasible vector) or P > 1.
ProbabilityVector vertex_vector(double max_probability, int n);

/// D(theta) = h_min(spec, cos^2 theta), theta in [0, pi/2).
double d_theta(const EntropySpec& spec, double theta);

/// Kink locations arccos(1/sqrt(m)), m = 2, 3, ..., that fall inside [lo, hi].
std::vector<double> d_theta_breakpoints(double lo, double hi);

}  // namespace eur
