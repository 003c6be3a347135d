#pragma once

namespace eur {

/// arccos(sqrt(p)) with the argument clamped into [0, 1].
double probability_angle(double p);

/// Overlaps (c_A, c_B, c_AB) of a measurement pair and their angles gamma = arccos(c).
class OverlapTriplet {
 public:
  /// Requires c's in (0, 1] and c_AB <= c_A c_B (to 1e-12). Throws std::invalid_argument.
  OverlapTriplet(double c_a, double c_b, double c_ab);

  /// (1, 1, c): two nondegenerate projective measurements with overlap c.
  static OverlapTriplet nondegenerate(double c) { return {1.0, 1.0, c}; }

  double c_a() const { return c_a_; }
  double c_b() const { return c_b_; }
  double c_ab() const { return c_ab_; }
  double gamma_a() const { return gamma_a_; }
  double gamma_b() const { return gamma_b_; }
  double gamma_ab() const { return gamma_ab_; }

  /// gamma_AB <= gamma_A + gamma_B: the Landau-Pollak curve never cuts the caps.
  bool corner_dominates(double slack = 0.0) const {
    return gamma_ab_ <= gamma_a_ + gamma_b_ + slack;
  }

 private:
  double c_a_, c_b_, c_ab_;
  double gamma_a_, gamma_b_, gamma_ab_;
};

/// g_c(x) = cos^2(arccos c - arccos sqrt x), defined for x in [c^2, 1].
/// Throws std::domain_error below c^2 (beyond 1e-12) and std::invalid_argument for c outside (0, 1].
double g_c(double c, double x);

/// Membership of a pair of maximal probabilities in the Landau-Pollak domain:
/// P_A <= c_A^2, P_B <= c_B^2 and arccos sqrt(P_A) + arccos sqrt(P_B) >= gamma_AB,
/// all with 1e-12 slack. Returns false for P outside [1/N, 1].
bool lp_domain_contains(const OverlapTriplet& t, double p_a, double p_b, int n_a, int n_b);

}  // namespace eur
