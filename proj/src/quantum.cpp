#include "eurbound/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eur {

namespace {

constexpr double kMatrixTolerance = 1e-10;

std::complex<double> unit_phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tolerance) : m_(std::move(m)) {
  if (m_.rows() == 0 || !m_.allFinite() || !is_unitary(m_, tolerance))
    throw std::invalid_argument("matrix is not unitary");
}

DensityOperator::DensityOperator(ComplexMatrix rho, double tolerance) : rho_(std::move(rho)) {
  if (rho_.rows() == 0 || !rho_.allFinite() || !is_hermitian(rho_, tolerance))
    throw std::invalid_argument("density operator must be Hermitian");
  if (std::abs(rho_.trace() - 1.0) > tolerance)
    throw std::invalid_argument("density operator must have unit trace");
  if (min_eigenvalue(rho_) < -tolerance)
    throw std::invalid_argument("density operator must be positive semidefinite");
}

DensityOperator DensityOperator::pure(const ComplexVector& psi) {
  const double norm2 = psi.squaredNorm();
  if (!(norm2 > 0.0)) throw std::invalid_argument("state vector must be nonzero");
  return DensityOperator(psi * psi.adjoint() / norm2);
}

Povm::Povm(std::vector<ComplexMatrix> elements, double tolerance) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("POVM needs at least one element");
  const auto n = elements_.front().rows();
  ComplexMatrix total = ComplexMatrix::Zero(n, n);
  for (const auto& e : elements_) {
    if (e.rows() != n || e.cols() != n) throw std::invalid_argument("POVM elements differ in size");
    if (!e.allFinite() || !is_hermitian(e, tolerance))
      throw std::invalid_argument("POVM element is not Hermitian");
    if (min_eigenvalue(e) < -tolerance)
      throw std::invalid_argument("POVM element is not positive semidefinite");
    total += e;
  }
  if ((total - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tolerance)
    throw std::invalid_argument("POVM elements do not sum to the identity");
}

Povm Povm::projective(const ComplexMatrix& basis_columns) {
  std::vector<ComplexMatrix> elements;
  elements.reserve(basis_columns.cols());
  for (Eigen::Index j = 0; j < basis_columns.cols(); ++j)
    elements.push_back(basis_columns.col(j) * basis_columns.col(j).adjoint());
  return Povm(std::move(elements));
}

std::pair<Povm, Povm> projective_pair(const UnitaryMatrix& t) {
  // Column j of conj(T) holds <a_i|b_j> = conj(T_ij).
  return {Povm::projective(ComplexMatrix::Identity(t.dim(), t.dim())),
          Povm::projective(t.matrix().conjugate())};
}

ProbabilityVector outcome_probabilities(const Povm& povm, const DensityOperator& rho) {
  if (povm.dim() != rho.dim()) throw std::invalid_argument("POVM and state dimensions differ");
  Eigen::VectorXd p(povm.outcomes());
  for (int i = 0; i < povm.outcomes(); ++i)
    p[i] = (povm.elements()[i] * rho.matrix()).trace().real();
  return ProbabilityVector::normalized(std::move(p), kMatrixTolerance);
}

OverlapTriplet overlap_triplet(const Povm& a, const Povm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("POVMs act on different spaces");
  std::vector<ComplexMatrix> root_a, root_b;
  double c_a = 0.0, c_b = 0.0, c_ab = 0.0;
  for (const auto& e : a.elements()) {
    root_a.push_back(psd_sqrt(e));
    c_a = std::max(c_a, spectral_norm(root_a.back()));
  }
  for (const auto& e : b.elements()) {
    root_b.push_back(psd_sqrt(e));
    c_b = std::max(c_b, spectral_norm(root_b.back()));
  }
  for (const auto& ra : root_a)
    for (const auto& rb : root_b) c_ab = std::max(c_ab, spectral_norm((ra * rb).eval()));
  return OverlapTriplet(std::min(c_a, 1.0), std::min(c_b, 1.0), std::min(c_ab, c_a * c_b));
}

// Entry moduli of a unitary never exceed 1; rounding can push the largest one past it.
double overlap_of_unitary(const UnitaryMatrix& t) {
  return std::min(1.0, t.matrix().cwiseAbs().maxCoeff());
}

UnitaryMatrix dft_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  ComplexMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      f(j, k) = scale * unit_phase(2.0 * std::numbers::pi * ((j * k) % n) / n);
  return UnitaryMatrix(std::move(f));
}

UnitaryMatrix cyclic_permutation(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) p(i, (i + 1) % n) = 1.0;
  return UnitaryMatrix(std::move(p));
}

UnitaryMatrix permutation_power(int n, double s) {
  if (n < 2) throw std::invalid_argument("permutation power needs N >= 2");
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("power must lie in [0, 1]");
  const ComplexMatrix f = dft_matrix(n).matrix();
  ComplexVector eig(n);
  for (int k = 0; k < n; ++k) {
    double phase = 2.0 * std::numbers::pi * k / n;
    if (phase > std::numbers::pi) phase -= 2.0 * std::numbers::pi;
    eig[k] = unit_phase(s * phase);
  }
  ComplexMatrix t = f * eig.asDiagonal() * f.adjoint();
  return UnitaryMatrix(std::move(t));
}

UnitaryMatrix qubit_rotation(double c) {
  if (!(c >= 1.0 / std::sqrt(2.0) - 1e-12) || c > 1.0)
    throw std::invalid_argument("a qubit overlap must lie in [1/sqrt(2), 1]");
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  ComplexMatrix r(2, 2);
  r << c, s, -s, c;
  return UnitaryMatrix(std::move(r));
}

UnitaryMatrix unitary_with_overlap(int n, double c) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  t.topLeftCorner(2, 2) = qubit_rotation(c).matrix();
  if (n > 2) {
    if (c < 1.0 / std::sqrt(n - 2.0) - 1e-12)
      throw std::invalid_argument("overlap too small for the block construction at this N");
    t.bottomRightCorner(n - 2, n - 2) = dft_matrix(n - 2).matrix();
  }
  return UnitaryMatrix(std::move(t));
}

QuantumSampler::QuantumSampler(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

ComplexMatrix QuantumSampler::gaussian(int rows, int cols) {
  ComplexMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal_(engine_);
      const double im = normal_(engine_);
      g(i, j) = {re, im};
    }
  return g;
}

UnitaryMatrix QuantumSampler::haar_unitary(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  const ComplexMatrix g = gaussian(n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (int k = 0; k < n; ++k) {
    const std::complex<double> d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : std::complex<double>(1.0);
  }
  return UnitaryMatrix(std::move(q));
}

ComplexVector QuantumSampler::haar_vector(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  ComplexVector v = gaussian(n, 1).col(0);
  return v / v.norm();
}

DensityOperator QuantumSampler::state(int n, Purity purity) {
  if (purity == Purity::Pure) return DensityOperator::pure(haar_vector(n));
  const ComplexMatrix g = gaussian(n, n);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return DensityOperator(std::move(rho));
}

Povm QuantumSampler::rank_one_povm(int n, int outcomes) {
  if (outcomes < 2) throw std::invalid_argument("POVM needs at least two outcomes");
  std::vector<ComplexMatrix> effects;
  ComplexMatrix total = ComplexMatrix::Zero(n, n);
  for (int k = 0; k + 1 < outcomes; ++k) {
    const ComplexVector v = gaussian(n, 1).col(0);
    effects.push_back(v * v.adjoint());
    total += effects.back();
  }
  const double scale = 1.0 / spectral_norm(total);
  for (auto& e : effects) e *= scale;
  ComplexMatrix rest = ComplexMatrix::Identity(n, n) - total * scale;
  rest = (rest + rest.adjoint()).eval() / 2.0;
  effects.push_back(std::move(rest));
  return Povm(std::move(effects));
}

UnitaryMatrix haar_random_unitary(int n, std::uint64_t seed) {
  return QuantumSampler(seed).haar_unitary(n);
}

DensityOperator random_state(int n, Purity purity, std::uint64_t seed) {
  return QuantumSampler(seed).state(n, purity);
}

}  // namespace eur
