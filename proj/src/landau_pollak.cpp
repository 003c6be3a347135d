#include "eurbound/landau_pollak.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eur {

namespace {

constexpr double kSlack = 1e-12;

double guarded_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

void require_overlap(double c, const char* what) {
  if (!(c > 0.0) || c > 1.0 + kSlack)
    throw std::invalid_argument(std::string(what) + " must lie in (0, 1]");
}

}  // namespace

double probability_angle(double p) { return guarded_acos(std::sqrt(std::clamp(p, 0.0, 1.0))); }

OverlapTriplet::OverlapTriplet(double c_a, double c_b, double c_ab)
    : c_a_(c_a), c_b_(c_b), c_ab_(c_ab) {
  require_overlap(c_a, "c_A");
  require_overlap(c_b, "c_B");
  require_overlap(c_ab, "c_AB");
  if (c_ab > c_a * c_b + kSlack) throw std::invalid_argument("c_AB must not exceed c_A * c_B");
  c_a_ = std::min(c_a, 1.0);
  c_b_ = std::min(c_b, 1.0);
  c_ab_ = std::min(c_ab, 1.0);
  gamma_a_ = guarded_acos(c_a_);
  gamma_b_ = guarded_acos(c_b_);
  gamma_ab_ = guarded_acos(c_ab_);
}

double g_c(double c, double x) {
  require_overlap(c, "c");
  if (x > 1.0 + kSlack || !(x >= c * c - kSlack))
    throw std::domain_error("g_c is defined on [c^2, 1]");
  const double d = guarded_acos(c) - probability_angle(x);
  const double cd = std::cos(std::max(d, 0.0));
  return cd * cd;
}

bool lp_domain_contains(const OverlapTriplet& t, double p_a, double p_b, int n_a, int n_b) {
  if (n_a <= 0 || n_b <= 0) return false;
  if (p_a < 1.0 / n_a - kSlack || p_a > 1.0 + kSlack) return false;
  if (p_b < 1.0 / n_b - kSlack || p_b > 1.0 + kSlack) return false;
  if (p_a > t.c_a() * t.c_a() + kSlack || p_b > t.c_b() * t.c_b() + kSlack) return false;
  return probability_angle(p_a) + probability_angle(p_b) >= t.gamma_ab() - kSlack;
}

}  // namespace eur
