#pragma once

#include <Eigen/Dense>

#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eur {

/// Entropic index lambda in [0, +inf]. Infinity is a distinct state, never a float.
class EntropicIndex {
 public:
  constexpr EntropicIndex() = default;
  /// Throws std::domain_error for negative or NaN values.
  explicit EntropicIndex(double value);

  static constexpr EntropicIndex infinity() { return EntropicIndex(Tag{}); }

  bool is_infinite() const { return infinite_; }
  /// Finite value; +inf for the infinite index.
  double value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }
  bool is_zero() const { return !infinite_ && value_ == 0.0; }
  /// |lambda - 1| < 1e-9 is treated as the Shannon limit.
  bool is_shannon_limit() const;

  friend bool operator==(const EntropicIndex&, const EntropicIndex&) = default;

 private:
  struct Tag {};
  constexpr explicit EntropicIndex(Tag) : infinite_(true) {}
  double value_ = 1.0;
  bool infinite_ = false;
};

enum class Family { Shannon, Renyi, Tsallis, GeneralF, Custom };
enum class PhiShape { StrictlyConcave, StrictlyConvex };
enum class HMonotonicity { Increasing, Decreasing };

/// A Salicru (h, phi) entropic functional pair. H(p) = h(sum_k phi(p_k)).
///
/// The named families dispatch their index limits (lambda = 0, 1, inf) to
/// dedicated formulas; GeneralF uses h(x) = f(x) / (1 - lambda) with a
/// user-supplied increasing f, f(1) = 0, and is expected to satisfy f'(1) = 1
/// for the lambda -> 1 Shannon limit to hold.
class EntropySpec {
 public:
  using Scalar = std::function<double(double)>;

  static EntropySpec shannon();
  static EntropySpec renyi(EntropicIndex index);
  static EntropySpec renyi(double index) { return renyi(EntropicIndex(index)); }
  static EntropySpec tsallis(EntropicIndex index);
  static EntropySpec tsallis(double index) { return tsallis(EntropicIndex(index)); }
  static EntropySpec general_f(std::string f_tag, Scalar f, double index);
  /// Throws std::invalid_argument if the shape/monotonicity pairing is
  /// inconsistent or phi(0) != 0 or h(phi(1)) != 0 (to 1e-12).
  static EntropySpec custom(std::string tag, Scalar phi, Scalar h, PhiShape shape,
                            HMonotonicity monotonicity);

  Family family() const { return family_; }
  const EntropicIndex& index() const { return index_; }
  PhiShape phi_shape() const { return shape_; }
  HMonotonicity h_monotonicity() const { return monotonicity_; }
  const std::string& tag() const { return tag_; }

  /// phi(x) with phi(0) := 0. For lambda = 0, phi is the support indicator (x > 1e-12).
  double phi(double x) const;
  double h(double x) const;

  /// Canonical text form: shannon, renyi:<l|inf>, tsallis:<l>, or the custom tag.
  std::string to_string() const;

 private:
  EntropySpec() = default;

  Family family_ = Family::Shannon;
  EntropicIndex index_{};
  PhiShape shape_ = PhiShape::StrictlyConcave;
  HMonotonicity monotonicity_ = HMonotonicity::Increasing;
  std::string tag_;
  Scalar f_;
  Scalar phi_;
  Scalar h_;
};

/// Parses `shannon`, `renyi:<l|inf>`, `tsallis:<l|inf>`. Throws std::invalid_argument.
EntropySpec parse_entropy_spec(std::string_view text);

/// Probability vector: nonnegative components summing to one.
class ProbabilityVector {
 public:
  /// Components >= -1e-15 are clamped to zero; the sum must be 1 within 1e-12.
  /// Throws std::invalid_argument otherwise.
  explicit ProbabilityVector(Eigen::VectorXd components);
  ProbabilityVector(std::initializer_list<double> components);

  static ProbabilityVector uniform(int n);
  static ProbabilityVector delta(int n, int at = 0);
  /// Clamps entries above -tolerance to zero and renormalizes. Used for
  /// probabilities coming out of floating-point linear algebra.
  static ProbabilityVector normalized(Eigen::VectorXd raw, double tolerance = 1e-10);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int k) const { return p_[k]; }
  const Eigen::VectorXd& components() const { return p_; }
  double max_component() const { return p_.maxCoeff(); }
  int support_size(double threshold = 1e-12) const;
  /// Components in nonincreasing order.
  Eigen::VectorXd sorted_descending() const;

 private:
  Eigen::VectorXd p_;
};

/// p is majorized by q (p < q): ordered partial sums of p never exceed those of q.
bool is_majorized_by(const ProbabilityVector& p, const ProbabilityVector& q,
                     double tolerance = 1e-12);

/// A value repeated `count` times; the compressed form of a probability vector.
struct WeightedValue {
  double value;
  int count;
};

/// Entropy of the multiset described by `terms`. Shared by the full-vector
/// path and the closed forms that only know component multiplicities.
double entropy_of_multiset(const EntropySpec& spec, std::span<const WeightedValue> terms);

double entropy(const EntropySpec& spec, const ProbabilityVector& p);

/// h(N phi(1/N)), the entropy of the uniform distribution.
double max_entropy(const EntropySpec& spec, int n);

/// S = (1 - exp((1-l) R)) / (l - 1); identity in the Shannon limit.
double renyi_to_tsallis(double lambda, double renyi_value);
/// R = log(1 + (1-l) S) / (1 - l); identity in the Shannon limit.
double tsallis_to_renyi(double lambda, double tsallis_value);

}  // namespace eur
