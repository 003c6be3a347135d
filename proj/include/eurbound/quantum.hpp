#pragma once

#include "eurbound/entropy.hpp"
#include "eurbound/landau_pollak.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace eur {

template <typename Scalar>
using ComplexMatrixT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexMatrix = ComplexMatrixT<double>;
using ComplexVector = Eigen::VectorXcd;

// Matrix helpers. Templated on the expression so they accept Eigen blocks and products.

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  typename Eigen::NumTraits<typename Derived::Scalar>::Real tolerance) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m,
                typename Eigen::NumTraits<typename Derived::Scalar>::Real tolerance) {
  using Plain = typename Derived::PlainObject;
  if (m.rows() != m.cols()) return false;
  const Plain product = m * m.adjoint();
  return (product - Plain::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tolerance;
}

/// Square root of a Hermitian PSD matrix through its eigendecomposition. Eigenvalues
/// in [-clamp, 0) are treated as zero; anything more negative is left for the caller
/// to reject via min_eigenvalue.
template <typename Derived>
typename Derived::PlainObject psd_sqrt(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  Eigen::SelfAdjointEigenSolver<Plain> eig(m.derived());
  const auto roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * roots.asDiagonal() * eig.eigenvectors().adjoint();
}

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real min_eigenvalue(
    const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  Eigen::SelfAdjointEigenSolver<Plain> eig(m.derived(), Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

/// Operator norm (largest singular value).
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real spectral_norm(
    const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  Eigen::JacobiSVD<Plain> svd(m.derived());
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

/// N x N unitary, checked to U U^dagger = I within 1e-10.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix m, double tolerance = 1e-10);
  static UnitaryMatrix identity(int n) { return UnitaryMatrix(ComplexMatrix::Identity(n, n)); }

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  ComplexMatrix m_;
};

/// Hermitian PSD operator of unit trace (tolerance 1e-10).
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix rho, double tolerance = 1e-10);
  /// |psi><psi| / <psi|psi>.
  static DensityOperator pure(const ComplexVector& psi);

  const ComplexMatrix& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }

 private:
  ComplexMatrix rho_;
};

/// Hermitian PSD elements summing to the identity (tolerance 1e-10).
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> elements, double tolerance = 1e-10);
  /// Rank-one projectors onto the columns of an orthonormal basis.
  static Povm projective(const ComplexMatrix& basis_columns);

  const std::vector<ComplexMatrix>& elements() const { return elements_; }
  int outcomes() const { return static_cast<int>(elements_.size()); }
  int dim() const { return static_cast<int>(elements_.front().rows()); }

 private:
  std::vector<ComplexMatrix> elements_;
};

/// Projective measurements in the computational basis {a_i} and in the basis {b_j}
/// with <b_j|a_i> = T_ij.
std::pair<Povm, Povm> projective_pair(const UnitaryMatrix& t);

/// p_i = Tr(A_i rho), clamped and renormalized within 1e-10 drift.
ProbabilityVector outcome_probabilities(const Povm& povm, const DensityOperator& rho);

/// (max_i ||sqrt A_i||, max_j ||sqrt B_j||, max_ij ||sqrt A_i sqrt B_j||) in operator norm.
OverlapTriplet overlap_triplet(const Povm& a, const Povm& b);

/// max_ij |T_ij|, in [1/sqrt N, 1].
double overlap_of_unitary(const UnitaryMatrix& t);

UnitaryMatrix dft_matrix(int n);
/// Cyclic shift with ones at (i, i+1 mod N).
UnitaryMatrix cyclic_permutation(int n);
/// Fractional power of the cyclic shift through its DFT diagonalization, with the
/// eigenphases taken in (-pi, pi]. s = 0 is the identity, s = 1 the shift itself.
UnitaryMatrix permutation_power(int n, double s);
/// Real 2 x 2 rotation with overlap c in [1/sqrt 2, 1].
UnitaryMatrix qubit_rotation(double c);
/// Block diagonal [rotation(c), DFT_{N-2}]: overlap c whenever c >= 1/sqrt(N-2).
UnitaryMatrix unitary_with_overlap(int n, double c);

enum class Purity { Pure, Mixed };

/// Owns its RNG; distinct instances are independent and deterministic per seed.
class QuantumSampler {
 public:
  explicit QuantumSampler(std::uint64_t seed) : engine_(seed) {}
  QuantumSampler(std::uint64_t seed, std::uint64_t stream);

  /// Entries with independent standard normal real and imaginary parts.
  ComplexMatrix gaussian(int rows, int cols);
  /// QR of a Ginibre matrix with R's diagonal phases moved into Q.
  UnitaryMatrix haar_unitary(int n);
  /// Uniformly distributed unit vector.
  ComplexVector haar_vector(int n);
  /// Pure: Haar vector projector. Mixed: G G^dagger / Tr, G Ginibre.
  DensityOperator state(int n, Purity purity);
  /// `outcomes - 1` random rank-one effects scaled so their sum has norm one,
  /// completed by I minus that sum.
  Povm rank_one_povm(int n, int outcomes);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

UnitaryMatrix haar_random_unitary(int n, std::uint64_t seed);
DensityOperator random_state(int n, Purity purity, std::uint64_t seed);

}  // namespace eur
