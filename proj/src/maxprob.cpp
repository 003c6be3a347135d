#include "eurbound/maxprob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace eur {

namespace {

constexpr double kIntegerSnap = 1e-12;
// 1 - m fl(1/m) is at most half an ulp of 1; anything this small is rounding, not mass.
constexpr double kResidualNoise = 4 * std::numeric_limits<double>::epsilon();

struct Vertex {
  int pinned;
  double residual;
};

Vertex vertex_shape(double p) {
  const int m = pinned_count(p);
  const double residual = std::fma(-static_cast<double>(m), p, 1.0);
  return {m, residual > kResidualNoise ? residual : 0.0};
}

double h_min_of(const EntropySpec& spec, double p, const Vertex& v) {
  const WeightedValue terms[] = {{p, v.pinned}, {v.residual, 1}};
  return entropy_of_multiset(spec, terms);
}

}  // namespace

int pinned_count(double max_probability) {
  if (!(max_probability > 0.0) || max_probability > 1.0)
    throw std::invalid_argument("maximum probability must lie in (0, 1]");
  const double inv = 1.0 / max_probability;
  const double nearest = std::round(inv);
  if (std::abs(inv - nearest) < kIntegerSnap) return static_cast<int>(nearest);
  return static_cast<int>(std::floor(inv));
}

double h_min(const EntropySpec& spec, double max_probability) {
  return h_min_of(spec, max_probability, vertex_shape(max_probability));
}

ProbabilityVector vertex_vector(double max_probability, int n) {
  if (n <= 0) throw std::invalid_argument("dimension must be positive");
  Vertex v = vertex_shape(max_probability);
  // P = 1/N rounded down leaves a residual of a few ulps with no slot left for it.
  if (v.pinned == n && v.residual <= kIntegerSnap) v.residual = 0.0;
  const bool has_residual = v.residual > 0.0;
  if (v.pinned + (has_residual ? 1 : 0) > n)
    throw std::invalid_argument("maximum probability below 1/N has no feasible vector");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
  p.head(v.pinned).setConstant(max_probability);
  if (has_residual) p[v.pinned] = v.residual;
  return ProbabilityVector::normalized(std::move(p), 1e-12);
}

double d_theta(const EntropySpec& spec, double theta) {
  if (!(theta >= 0.0) || theta >= std::numbers::pi / 2)
    throw std::invalid_argument("theta must lie in [0, pi/2)");
  const double c = std::cos(theta);
  const double p = c * c;
  // 1 - m cos^2(theta) = m sin(theta - theta_m) sin(theta + theta_m) with
  // cos^2(theta_m) = 1/m, which keeps the small residuals that 1 - m p rounds away.
  const int m = pinned_count(p);
  const double theta_m = m == 1 ? 0.0 : std::acos(1.0 / std::sqrt(static_cast<double>(m)));
  const double residual = m * std::sin(theta - theta_m) * std::sin(theta + theta_m);
  return h_min_of(spec, p, {m, std::max(0.0, residual)});
}

std::vector<double> d_theta_breakpoints(double lo, double hi) {
  std::vector<double> out;
  if (hi < lo) return out;
  hi = std::min(hi, std::nextafter(std::numbers::pi / 2, 0.0));
  // cos^2(theta) >= cos^2(hi) bounds the relevant m by 1/cos^2(hi).
  const double c = std::cos(hi);
  const double m_max = std::min(std::floor(1.0 / (c * c)) + 1.0, 1e6);
  for (int m = 2; m <= m_max; ++m) {
    const double theta = std::acos(1.0 / std::sqrt(static_cast<double>(m)));
    if (theta > hi) break;
    if (theta >= lo) out.push_back(theta);
  }
  return out;
}

}  // namespace eur
