#pragma once

#include "eurbound/entropy.hpp"
#include "eurbound/landau_pollak.hpp"

#include <optional>

namespace eur {

enum class BoundBranch { AnalyticCorner, Minimized };

struct BoundResult {
  double value = 0.0;
  BoundBranch branch = BoundBranch::AnalyticCorner;
  /// Set only for the minimized branch; lies in [gamma_A, gamma_AB - gamma_B].
  std::optional<double> minimizer_theta;
  int evaluations = 0;
};

/// Lower bound on H_A(p(A, rho)) + H_B(p(B, rho)) from the overlap triplet.
///
/// When gamma_AB <= gamma_A + gamma_B (1e-12 slack) the bound is the corner value
/// D_A(gamma_A) + D_B(gamma_B). Otherwise it is the minimum over
/// theta in [gamma_A, gamma_AB - gamma_B] of D_A(theta) + D_B(gamma_AB - theta).
/// D is only piecewise smooth (kinks at arccos(1/sqrt m)), so the interval is split at
/// every kink of both terms; each piece gets a 512-point scan followed by a
/// golden-section polish to |dtheta| <= 1e-10. Ties within 1e-12 resolve to the
/// smallest theta.
BoundResult proposition_bound(const EntropySpec& a, const EntropySpec& b, const OverlapTriplet& t);

/// D_A(gamma_A) + D_B(gamma_B); never above proposition_bound.
double analytic_lower(const EntropySpec& a, const EntropySpec& b, const OverlapTriplet& t);

double deutsch(double c);
double maassen_uffink(double c);

/// Position of (alpha, beta) relative to the conjugacy curve 1/(2 alpha) + 1/(2 beta) = 1.
enum class ConjugacyRegion { Curve, Below, Above };
ConjugacyRegion conjugacy_region(const EntropicIndex& alpha, const EntropicIndex& beta,
                                 double tolerance = 1e-9);

/// The function f of the F_lambda family: log gives Renyi, id - 1 gives Tsallis.
enum class FTag { Log, IdMinusOne };

/// f(c^{2(lambda-1)}) / (1 - lambda) with lambda = max(alpha, beta).
/// Throws std::invalid_argument when (alpha, beta) lies above the conjugacy curve.
double rastegin_f(FTag f, const EntropicIndex& alpha, const EntropicIndex& beta, double c);

/// -2 log c + (1 - c) log(c / c2), c2 the second largest |T_ij|.
double coles_piani(double c, double c2);
/// Smallest admissible second-largest modulus sqrt(N - 2 + c^2) / (N - 1).
double coles_piani_second_overlap(double c, int n);
double coles_piani_star(double c, int n);

/// The overlap-only member of the majorization series for Renyi entropies with
/// beta = alpha: the Renyi entropy of ((1+c)^2/4, 1 - (1+c)^2/4).
double prz_worst(const EntropicIndex& alpha, double c);

/// (1 - exp((1 - alpha) B)) / (alpha - 1), B the Renyi alpha/alpha bound.
double tsallis_product_relation(const EntropicIndex& alpha, const OverlapTriplet& t);

}  // namespace eur
