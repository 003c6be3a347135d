#include "eurbound/landau_pollak.hpp"
#include "eurbound/quantum.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace eur;

TEST_SUITE("landau_pollak") {

TEST_CASE("g_c examples") {
  for (double c : {0.3, 0.5, 0.8, 0.99}) {
    CHECK(g_c(c, c * c) == doctest::Approx(1.0));
    CHECK(g_c(c, 1.0) == doctest::Approx(c * c));
    CHECK(g_c(c, (1 + c) / 2) == doctest::Approx((1 + c) / 2).epsilon(1e-12));
  }
  CHECK(g_c(1.0, 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(g_c(1.0, 0.6), std::domain_error);
  CHECK_THROWS_AS(g_c(0.5, 0.2), std::domain_error);
  CHECK_NOTHROW(g_c(0.5, 0.25 - 1e-13));
  CHECK_THROWS_AS(g_c(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(g_c(1.5, 0.5), std::invalid_argument);
}

TEST_CASE("g_c is non-increasing and an involution on [c^2, 1]") {
  for (double c : {0.2, 0.5, 0.7, 0.95}) {
    double prev = g_c(c, c * c);
    for (int k = 1; k <= 500; ++k) {
      const double x = c * c + (1 - c * c) * k / 500.0;
      const double y = g_c(c, x);
      CHECK(y <= prev + 1e-14);
      CHECK(y >= c * c - 1e-14);
      // P_B <= g_c(P_A) iff P_A <= g_c(P_B).
      CHECK(g_c(c, y) == doctest::Approx(x).epsilon(1e-9));
      prev = y;
    }
  }
}

TEST_CASE("triplet validation") {
  CHECK_THROWS_AS(OverlapTriplet(0.9, 0.9, 0.85), std::invalid_argument);
  CHECK_THROWS_AS(OverlapTriplet(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(OverlapTriplet(1.0, 1.0, 1.2), std::invalid_argument);
  const OverlapTriplet t(0.9, 0.8, 0.72 + 1e-13);
  CHECK(t.gamma_a() == doctest::Approx(std::acos(0.9)));
  CHECK(OverlapTriplet::nondegenerate(0.5).gamma_ab() == doctest::Approx(std::acos(0.5)));
  CHECK(OverlapTriplet(0.9, 0.9, 0.8).corner_dominates());
  CHECK_FALSE(OverlapTriplet::nondegenerate(0.5).corner_dominates());
}

TEST_CASE("domain membership") {
  const auto t = OverlapTriplet::nondegenerate(0.5);
  CHECK(lp_domain_contains(t, 0.5, 0.5, 2, 2));
  CHECK(lp_domain_contains(t, 1.0, 0.25, 2, 4));
  CHECK_FALSE(lp_domain_contains(t, 1.0, 0.5, 2, 2));
  CHECK_FALSE(lp_domain_contains(t, 0.2, 0.5, 3, 3));  // below 1/N
  const double pa = 0.8, edge = g_c(0.5, pa);
  CHECK(lp_domain_contains(t, pa, edge, 3, 3));
  CHECK_FALSE(lp_domain_contains(t, pa, edge + 1e-9, 3, 3));
  const OverlapTriplet caps(0.8, 0.9, 0.5);
  CHECK_FALSE(lp_domain_contains(caps, 0.7, 0.5, 3, 3));
}

TEST_CASE("property: sampled states stay inside the domain") {
  for (int s = 0; s < 2000; ++s) {
    QuantumSampler sampler(77, s);
    const int n = 2 + s % 3;
    const UnitaryMatrix t = sampler.haar_unitary(n);
    const auto [a, b] = projective_pair(t);
    const DensityOperator rho = sampler.state(n, s % 2 ? Purity::Mixed : Purity::Pure);
    const double pa = outcome_probabilities(a, rho).max_component();
    const double pb = outcome_probabilities(b, rho).max_component();
    CHECK(lp_domain_contains(OverlapTriplet::nondegenerate(overlap_of_unitary(t)), pa, pb, n, n));
  }
}

}  // TEST_SUITE
