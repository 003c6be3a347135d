#include "eurbound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <cstdio>
#include <stdexcept>
#include <tuple>

namespace eur {

namespace {

constexpr double kShannonWindow = 1e-9;
constexpr double kSupportThreshold = 1e-12;
constexpr double kNormalizationTolerance = 1e-12;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double power_phi(double x, double lambda) {
  if (x <= 0.0) return 0.0;
  if (lambda == 0.0) return x > kSupportThreshold ? 1.0 : 0.0;
  return std::pow(x, lambda);
}

std::pair<PhiShape, HMonotonicity> power_family_shape(const EntropicIndex& index) {
  if (index.is_infinite() || index.value() > 1.0 + kShannonWindow)
    return {PhiShape::StrictlyConvex, HMonotonicity::Decreasing};
  return {PhiShape::StrictlyConcave, HMonotonicity::Increasing};
}

std::string format_index(const EntropicIndex& index) {
  if (index.is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", index.value());
  return buf;
}

}  // namespace

EntropicIndex::EntropicIndex(double value) : value_(value) {
  if (std::isnan(value) || value < 0.0)
    throw std::domain_error("entropic index must be a nonnegative number");
  if (std::isinf(value)) {
    value_ = 1.0;
    infinite_ = true;
  }
}

bool EntropicIndex::is_shannon_limit() const {
  return !infinite_ && std::abs(value_ - 1.0) < kShannonWindow;
}

EntropySpec EntropySpec::shannon() {
  EntropySpec s;
  s.family_ = Family::Shannon;
  s.tag_ = "shannon";
  return s;
}

EntropySpec EntropySpec::renyi(EntropicIndex index) {
  EntropySpec s;
  s.family_ = Family::Renyi;
  s.index_ = index;
  std::tie(s.shape_, s.monotonicity_) = power_family_shape(index);
  s.tag_ = "renyi";
  return s;
}

EntropySpec EntropySpec::tsallis(EntropicIndex index) {
  EntropySpec s;
  s.family_ = Family::Tsallis;
  s.index_ = index;
  std::tie(s.shape_, s.monotonicity_) = power_family_shape(index);
  s.tag_ = "tsallis";
  return s;
}

EntropySpec EntropySpec::general_f(std::string f_tag, Scalar f, double index) {
  if (!f) throw std::invalid_argument("general_f requires a function f");
  EntropySpec s;
  s.family_ = Family::GeneralF;
  s.index_ = EntropicIndex(index);
  std::tie(s.shape_, s.monotonicity_) = power_family_shape(s.index_);
  if (std::abs(f(1.0)) > 1e-12) throw std::invalid_argument("general_f requires f(1) = 0");
  s.tag_ = std::move(f_tag);
  s.f_ = std::move(f);
  return s;
}

EntropySpec EntropySpec::custom(std::string tag, Scalar phi, Scalar h, PhiShape shape,
                                HMonotonicity monotonicity) {
  if (!phi || !h) throw std::invalid_argument("custom spec requires phi and h");
  const bool paired =
      (shape == PhiShape::StrictlyConcave && monotonicity == HMonotonicity::Increasing) ||
      (shape == PhiShape::StrictlyConvex && monotonicity == HMonotonicity::Decreasing);
  if (!paired)
    throw std::invalid_argument("phi concave needs h increasing, phi convex needs h decreasing");
  if (std::abs(phi(0.0)) > 1e-12) throw std::invalid_argument("custom spec requires phi(0) = 0");
  if (std::abs(h(phi(1.0))) > 1e-12)
    throw std::invalid_argument("custom spec requires h(phi(1)) = 0");
  EntropySpec s;
  s.family_ = Family::Custom;
  s.shape_ = shape;
  s.monotonicity_ = monotonicity;
  s.tag_ = std::move(tag);
  s.phi_ = std::move(phi);
  s.h_ = std::move(h);
  return s;
}

double EntropySpec::phi(double x) const {
  switch (family_) {
    case Family::Shannon:
      return -xlogx(x);
    case Family::Custom:
      return x <= 0.0 ? 0.0 : phi_(x);
    default:
      if (index_.is_infinite())
        throw std::domain_error("no finite phi at an infinite entropic index");
      if (index_.is_shannon_limit()) return -xlogx(x);
      return power_phi(x, index_.value());
  }
}

double EntropySpec::h(double x) const {
  if (family_ == Family::Shannon) return x;
  if (family_ == Family::Custom) return h_(x);
  if (index_.is_infinite()) throw std::domain_error("no finite h at an infinite entropic index");
  if (index_.is_shannon_limit()) return x;
  const double one_minus = 1.0 - index_.value();
  switch (family_) {
    case Family::Renyi:
      return std::log(x) / one_minus;
    case Family::Tsallis:
      return (x - 1.0) / one_minus;
    default:
      return f_(x) / one_minus;
  }
}

std::string EntropySpec::to_string() const {
  switch (family_) {
    case Family::Shannon:
      return "shannon";
    case Family::Renyi:
    case Family::Tsallis:
    case Family::GeneralF:
      return tag_ + ":" + format_index(index_);
    default:
      return tag_;
  }
}

EntropySpec parse_entropy_spec(std::string_view text) {
  if (text == "shannon") return EntropySpec::shannon();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("unknown entropy spec '" + std::string(text) + "'");
  const std::string_view family = text.substr(0, colon);
  const std::string arg(text.substr(colon + 1));

  EntropicIndex index;
  if (arg == "inf") {
    index = EntropicIndex::infinity();
  } else {
    char* end = nullptr;
    const double v = std::strtod(arg.c_str(), &end);
    if (arg.empty() || end != arg.c_str() + arg.size() || !std::isfinite(v))
      throw std::invalid_argument("bad entropic index '" + arg + "'");
    if (v < 0.0) throw std::invalid_argument("entropic index must be nonnegative");
    index = EntropicIndex(v);
  }
  if (family == "renyi") return EntropySpec::renyi(index);
  if (family == "tsallis") return EntropySpec::tsallis(index);
  throw std::invalid_argument("unknown entropy family '" + std::string(family) + "'");
}

ProbabilityVector::ProbabilityVector(Eigen::VectorXd components) : p_(std::move(components)) {
  if (p_.size() == 0) throw std::invalid_argument("probability vector must be nonempty");
  for (Eigen::Index k = 0; k < p_.size(); ++k) {
    if (!std::isfinite(p_[k]) || p_[k] < -1e-15)
      throw std::invalid_argument("probability components must be nonnegative");
    p_[k] = std::max(p_[k], 0.0);
  }
  if (std::abs(p_.sum() - 1.0) > kNormalizationTolerance)
    throw std::invalid_argument("probability vector must sum to one");
}

ProbabilityVector::ProbabilityVector(std::initializer_list<double> components)
    : ProbabilityVector(Eigen::Map<const Eigen::VectorXd>(
          components.begin(), static_cast<Eigen::Index>(components.size()))) {}

ProbabilityVector ProbabilityVector::uniform(int n) {
  if (n <= 0) throw std::invalid_argument("dimension must be positive");
  return ProbabilityVector(Eigen::VectorXd::Constant(n, 1.0 / n));
}

ProbabilityVector ProbabilityVector::delta(int n, int at) {
  if (n <= 0 || at < 0 || at >= n) throw std::invalid_argument("bad delta position");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v[at] = 1.0;
  return ProbabilityVector(std::move(v));
}

ProbabilityVector ProbabilityVector::normalized(Eigen::VectorXd raw, double tolerance) {
  for (Eigen::Index k = 0; k < raw.size(); ++k) {
    if (!std::isfinite(raw[k]) || raw[k] < -tolerance)
      throw std::invalid_argument("negative probability beyond tolerance");
    raw[k] = std::max(raw[k], 0.0);
  }
  const double total = raw.sum();
  if (std::abs(total - 1.0) > tolerance)
    throw std::invalid_argument("probabilities drift from unit sum beyond tolerance");
  return ProbabilityVector(raw / total);
}

int ProbabilityVector::support_size(double threshold) const {
  return static_cast<int>((p_.array() > threshold).count());
}

Eigen::VectorXd ProbabilityVector::sorted_descending() const {
  Eigen::VectorXd s = p_;
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

bool is_majorized_by(const ProbabilityVector& p, const ProbabilityVector& q, double tolerance) {
  if (p.size() != q.size()) throw std::invalid_argument("majorization needs equal lengths");
  const Eigen::VectorXd ps = p.sorted_descending();
  const Eigen::VectorXd qs = q.sorted_descending();
  double sp = 0.0, sq = 0.0;
  for (int m = 0; m < p.size(); ++m) {
    sp += ps[m];
    sq += qs[m];
    if (sp > sq + tolerance) return false;
  }
  return true;
}

double entropy_of_multiset(const EntropySpec& spec, std::span<const WeightedValue> terms) {
  const EntropicIndex& index = spec.index();
  const auto sum_phi = [&](auto&& phi) {
    double s = 0.0;
    for (const auto& t : terms)
      if (t.count > 0) s += t.count * phi(t.value);
    return s;
  };
  const auto support = [&] {
    return sum_phi([](double v) { return v > kSupportThreshold ? 1.0 : 0.0; });
  };

  const bool shannon = spec.family() == Family::Shannon ||
                       (spec.family() != Family::Custom && index.is_shannon_limit());
  if (shannon) return -sum_phi(xlogx);

  switch (spec.family()) {
    case Family::Renyi: {
      if (index.is_infinite()) {
        double largest = 0.0;
        for (const auto& t : terms)
          if (t.count > 0) largest = std::max(largest, t.value);
        return -std::log(largest);
      }
      if (index.is_zero()) return std::log(support());
      const double lambda = index.value();
      return std::log(sum_phi([&](double v) { return power_phi(v, lambda); })) / (1.0 - lambda);
    }
    case Family::Tsallis: {
      if (index.is_infinite()) return 0.0;
      if (index.is_zero()) return support() - 1.0;
      const double lambda = index.value();
      return (1.0 - sum_phi([&](double v) { return power_phi(v, lambda); })) / (lambda - 1.0);
    }
    case Family::GeneralF:
      if (index.is_infinite())
        throw std::domain_error("general F entropy has no generic infinite-index limit");
      return spec.h(sum_phi([&](double v) { return spec.phi(v); }));
    default:
      return spec.h(sum_phi([&](double v) { return spec.phi(v); }));
  }
}

double entropy(const EntropySpec& spec, const ProbabilityVector& p) {
  std::vector<WeightedValue> terms;
  terms.reserve(p.size());
  for (int k = 0; k < p.size(); ++k) terms.push_back({p[k], 1});
  return entropy_of_multiset(spec, terms);
}

double max_entropy(const EntropySpec& spec, int n) {
  if (n <= 0) throw std::invalid_argument("dimension must be positive");
  const WeightedValue uniform{1.0 / n, n};
  return entropy_of_multiset(spec, std::span(&uniform, 1));
}

double renyi_to_tsallis(double lambda, double renyi_value) {
  const EntropicIndex index(lambda);
  if (index.is_infinite()) throw std::domain_error("mapping needs a finite index");
  if (index.is_shannon_limit()) return renyi_value;
  return -std::expm1((1.0 - lambda) * renyi_value) / (lambda - 1.0);
}

double tsallis_to_renyi(double lambda, double tsallis_value) {
  const EntropicIndex index(lambda);
  if (index.is_infinite()) throw std::domain_error("mapping needs a finite index");
  if (index.is_shannon_limit()) return tsallis_value;
  const double arg = (1.0 - lambda) * tsallis_value;
  if (arg <= -1.0) throw std::domain_error("Tsallis value outside the range of the index");
  return std::log1p(arg) / (1.0 - lambda);
}

}  // namespace eur
