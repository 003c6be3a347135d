#include "eurbound/maxprob.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace eur;

namespace {

std::vector<EntropySpec> battery() {
  return {EntropySpec::shannon(),    EntropySpec::renyi(0.0),   EntropySpec::renyi(0.5),
          EntropySpec::renyi(2.0),   EntropySpec::renyi(EntropicIndex::infinity()),
          EntropySpec::tsallis(0.0), EntropySpec::tsallis(0.5), EntropySpec::tsallis(2.0),
          EntropySpec::tsallis(5.0)};
}

}  // namespace

TEST_SUITE("maxprob") {

TEST_CASE("pinned count") {
  CHECK(pinned_count(1.0) == 1);
  CHECK(pinned_count(0.4) == 2);
  CHECK(pinned_count(0.1) == 10);
  CHECK(pinned_count(1.0 / 3.0) == 3);
  CHECK(pinned_count(0.5 + 1e-9) == 1);
}

TEST_CASE("vertex vectors") {
  const auto v = vertex_vector(0.4, 3);
  CHECK(v[0] == doctest::Approx(0.4));
  CHECK(v[1] == doctest::Approx(0.4));
  CHECK(v[2] == doctest::Approx(0.2));
  const auto w = vertex_vector(0.5, 4);
  CHECK(w[2] == 0.0);
  CHECK(w[3] == 0.0);
  CHECK(vertex_vector(1.0 / 3.0, 3)[2] == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(vertex_vector(0.3, 3), std::invalid_argument);
  CHECK_THROWS_AS(vertex_vector(1.2, 3), std::invalid_argument);
  CHECK_THROWS_AS(h_min(EntropySpec::shannon(), 0.0), std::invalid_argument);
}

TEST_CASE("closed-form examples") {
  for (const auto& s : battery()) CHECK(h_min(s, 1.0) == doctest::Approx(0.0));
  for (int n = 2; n <= 7; ++n)
    CHECK(h_min(EntropySpec::shannon(), 1.0 / n) == doctest::Approx(std::log(n)).epsilon(1e-13));
  // mpmath: -(0.8 log 0.4 + 0.2 log 0.2)
  CHECK(h_min(EntropySpec::shannon(), 0.4) == doctest::Approx(1.054920167986144).epsilon(1e-13));
  CHECK(d_theta(EntropySpec::shannon(), 0.0) == 0.0);
  CHECK(d_theta(EntropySpec::shannon(), std::numbers::pi / 4) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-13));
  CHECK(d_theta(EntropySpec::renyi(2.0), std::acos(std::sqrt(0.6))) ==
        doctest::Approx(0.653926467406664).epsilon(1e-12));
  // Renyi 0 counts the support: ceil(1/P).
  CHECK(h_min(EntropySpec::renyi(0.0), 0.3) == doctest::Approx(std::log(4.0)));
  CHECK(h_min(EntropySpec::renyi(EntropicIndex::infinity()), 0.3) == doctest::Approx(-std::log(0.3)));
}

TEST_CASE("accuracy next to a vertex") {
  // Renyi 1/2 of (cos^2 u, sin^2 u) is 2 log(cos u + sin u) ~ 2u.
  const EntropySpec half = EntropySpec::renyi(0.5);
  CHECK(d_theta(half, 1e-9) == doctest::Approx(2e-9).epsilon(1e-6));
  const double theta2 = std::acos(std::sqrt(0.5)) + 1e-9;
  const double p = std::cos(theta2) * std::cos(theta2);
  CHECK(d_theta(half, theta2) >= h_min(half, 0.5) - 1e-12);
  CHECK(d_theta(half, theta2) == doctest::Approx(h_min(half, p)).epsilon(1e-6));
  // fl(1/N) leaves a rounding residual that must not count as mass.
  for (int n : {3, 5, 7})
    CHECK(h_min(half, 1.0 / n) == doctest::Approx(std::log(n)).epsilon(1e-14));
  // Just below P = 1 the residual is kept, not snapped away.
  CHECK(h_min(half, 1.0 - 1e-14) > 1e-7);
}

TEST_CASE("breakpoints") {
  const auto k = d_theta_breakpoints(0.0, 1.2);
  REQUIRE(k.size() >= 2);
  CHECK(k[0] == doctest::Approx(std::numbers::pi / 4));
  CHECK(k[1] == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))));
  CHECK(std::is_sorted(k.begin(), k.end()));
  for (double x : k) CHECK(x <= 1.2);
  // D is continuous across each kink; the lambda < 1 members rise like a root of the residual.
  for (const auto& s : battery()) {
    for (double x : d_theta_breakpoints(0.1, 1.3)) {
      const double l = d_theta(s, x - 1e-13), r = d_theta(s, x + 1e-13);
      if (s.index().is_zero()) continue;  // Renyi/Tsallis 0 jump at the kinks
      CHECK(std::abs(l - r) < 1e-5);
    }
  }
}

TEST_CASE("property: h_min is the minimum over vectors with that maximum") {
  std::mt19937_64 rng(21);
  std::exponential_distribution<double> e(1.0);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 6;
    Eigen::VectorXd v(n);
    for (int k = 0; k < n; ++k) v[k] = e(rng);
    const ProbabilityVector p = ProbabilityVector::normalized(v / v.sum());
    const double pmax = p.max_component();
    for (const auto& s : battery()) {
      CHECK(entropy(s, p) >= h_min(s, pmax) - 1e-12);
      CHECK(entropy(s, vertex_vector(pmax, n)) == doctest::Approx(h_min(s, pmax)).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: monotone on fine grids") {
  for (const auto& s : battery()) {
    double prev = h_min(s, 1e-3);
    for (int k = 2; k <= 1000; ++k) {
      const double v = h_min(s, k / 1000.0);
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
    prev = d_theta(s, 0.0);
    for (int k = 1; k < 1000; ++k) {
      const double v = d_theta(s, std::numbers::pi / 2 * k / 1000.0);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

}  // TEST_SUITE
