#include "eurbound/bounds.hpp"

#include "eurbound/maxprob.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace eur {

namespace {

constexpr int kScanPoints = 512;
constexpr double kThetaTolerance = 1e-10;
constexpr double kTieTolerance = 1e-12;
constexpr double kCornerSlack = 1e-12;

void require_overlap(double c) {
  if (!(c > 0.0) || c > 1.0) throw std::invalid_argument("overlap must lie in (0, 1]");
}

double d_clamped(const EntropySpec& spec, double theta) {
  return d_theta(spec, std::clamp(theta, 0.0, std::nextafter(std::numbers::pi / 2, 0.0)));
}

struct Candidate {
  double theta;
  double value;
};

class AngleObjective {
 public:
  AngleObjective(const EntropySpec& a, const EntropySpec& b, double gamma_ab)
      : a_(a), b_(b), gamma_ab_(gamma_ab) {}

  double operator()(double theta) {
    ++evaluations_;
    return d_clamped(a_, theta) + d_clamped(b_, gamma_ab_ - theta);
  }

  int evaluations() const { return evaluations_; }

 private:
  const EntropySpec& a_;
  const EntropySpec& b_;
  double gamma_ab_;
  int evaluations_ = 0;
};

Candidate golden_section(AngleObjective& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > kThetaTolerance) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? Candidate{x1, f1} : Candidate{x2, f2};
}

// Scan one smooth piece and polish the best scan point.
Candidate minimize_piece(AngleObjective& f, double lo, double hi) {
  if (hi - lo <= kThetaTolerance) {
    const double vlo = f(lo), vhi = f(hi);
    return vlo <= vhi ? Candidate{lo, vlo} : Candidate{hi, vhi};
  }
  std::array<double, kScanPoints> values{};
  const double step = (hi - lo) / (kScanPoints - 1);
  const auto grid = [&](int k) { return k == kScanPoints - 1 ? hi : lo + k * step; };
  int best = 0;
  for (int k = 0; k < kScanPoints; ++k) {
    values[k] = f(grid(k));
    if (values[k] < values[best]) best = k;
  }
  Candidate out{grid(best), values[best]};
  const Candidate polished =
      golden_section(f, grid(std::max(best - 1, 0)), grid(std::min(best + 1, kScanPoints - 1)));
  if (polished.value < out.value) out = polished;
  return out;
}

std::vector<double> piece_boundaries(double lo, double hi, double gamma_ab) {
  std::vector<double> cuts{lo, hi};
  for (double k : d_theta_breakpoints(lo, hi)) cuts.push_back(k);
  // Kinks of D_B(gamma_AB - theta) sit at theta = gamma_AB - theta_m.
  for (double k : d_theta_breakpoints(gamma_ab - hi, gamma_ab - lo)) cuts.push_back(gamma_ab - k);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> out;
  for (double c : cuts) {
    c = std::clamp(c, lo, hi);
    if (out.empty() || c - out.back() > 1e-15) out.push_back(c);
  }
  if (out.size() == 1) out.push_back(hi);
  return out;
}

}  // namespace

BoundResult proposition_bound(const EntropySpec& a, const EntropySpec& b, const OverlapTriplet& t) {
  BoundResult result;
  if (t.corner_dominates(kCornerSlack)) {
    result.value = d_clamped(a, t.gamma_a()) + d_clamped(b, t.gamma_b()) + 0.0;
    result.branch = BoundBranch::AnalyticCorner;
    result.evaluations = 1;
    return result;
  }

  const double lo = t.gamma_a();
  const double hi = t.gamma_ab() - t.gamma_b();
  AngleObjective f(a, b, t.gamma_ab());
  const std::vector<double> cuts = piece_boundaries(lo, hi, t.gamma_ab());

  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    candidates.push_back(minimize_piece(f, cuts[i], cuts[i + 1]));

  double best_value = candidates.front().value;
  for (const auto& c : candidates) best_value = std::min(best_value, c.value);
  const Candidate* chosen = nullptr;
  for (const auto& c : candidates)
    if (c.value <= best_value + kTieTolerance && (!chosen || c.theta < chosen->theta))
      chosen = &c;

  result.value = chosen->value > 0.0 ? chosen->value : 0.0;
  result.branch = BoundBranch::Minimized;
  result.minimizer_theta = chosen->theta;
  result.evaluations = f.evaluations();
  return result;
}

double analytic_lower(const EntropySpec& a, const EntropySpec& b, const OverlapTriplet& t) {
  return d_clamped(a, t.gamma_a()) + d_clamped(b, t.gamma_b());
}

double deutsch(double c) {
  require_overlap(c);
  return -2.0 * std::log((1.0 + c) / 2.0);
}

double maassen_uffink(double c) {
  require_overlap(c);
  return -2.0 * std::log(c);
}

ConjugacyRegion conjugacy_region(const EntropicIndex& alpha, const EntropicIndex& beta,
                                 double tolerance) {
  // 1/(2 alpha) + 1/(2 beta) with 1/inf = 0 and 1/0 = inf.
  const auto half_inverse = [](const EntropicIndex& x) {
    if (x.is_infinite()) return 0.0;
    return x.is_zero() ? std::numeric_limits<double>::infinity() : 0.5 / x.value();
  };
  const double s = half_inverse(alpha) + half_inverse(beta);
  if (std::abs(s - 1.0) <= tolerance) return ConjugacyRegion::Curve;
  return s > 1.0 ? ConjugacyRegion::Below : ConjugacyRegion::Above;
}

double rastegin_f(FTag f, const EntropicIndex& alpha, const EntropicIndex& beta, double c) {
  require_overlap(c);
  if (conjugacy_region(alpha, beta) == ConjugacyRegion::Above)
    throw std::invalid_argument("Rastegin bound is only claimed on or below the conjugacy curve");
  const EntropicIndex lambda =
      alpha.is_infinite() || (!beta.is_infinite() && alpha.value() >= beta.value()) ? alpha : beta;
  if (lambda.is_shannon_limit()) return -2.0 * std::log(c);
  if (lambda.is_infinite()) return f == FTag::Log ? -2.0 * std::log(c) : 0.0;
  const double l = lambda.value();
  const double log_x = 2.0 * (l - 1.0) * std::log(c);  // log of c^{2(l-1)}
  const double fx = f == FTag::Log ? log_x : std::expm1(log_x);
  return fx / (1.0 - l);
}

double coles_piani(double c, double c2) {
  require_overlap(c);
  if (!(c2 > 0.0) || c2 > c + 1e-12)
    throw std::invalid_argument("second overlap must satisfy 0 < c2 <= c");
  return -2.0 * std::log(c) + (1.0 - c) * std::log(c / c2);
}

double coles_piani_second_overlap(double c, int n) {
  require_overlap(c);
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  return std::sqrt(n - 2.0 + c * c) / (n - 1.0);
}

double coles_piani_star(double c, int n) { return coles_piani(c, coles_piani_second_overlap(c, n)); }

double prz_worst(const EntropicIndex& alpha, double c) {
  require_overlap(c);
  const double b = (1.0 + c) / 2.0;
  const WeightedValue terms[] = {{b * b, 1}, {1.0 - b * b, 1}};
  return entropy_of_multiset(EntropySpec::renyi(alpha), terms);
}

double tsallis_product_relation(const EntropicIndex& alpha, const OverlapTriplet& t) {
  const auto spec = EntropySpec::renyi(alpha);
  const double bound = proposition_bound(spec, spec, t).value;
  if (alpha.is_infinite()) return 0.0;
  return renyi_to_tsallis(alpha.value(), bound);
}

}  // namespace eur
