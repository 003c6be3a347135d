#include "eurbound/bounds.hpp"
#include "eurbound/maxprob.hpp"
#include "eurbound/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <variant>

using namespace eur;

TEST_SUITE("oracle") {

TEST_CASE("fixed-max oracle: examples") {
  const auto sh = EntropySpec::shannon();
  const auto top = min_entropy_fixed_max(sh, 1.0, 4, 2048, 1);
  CHECK(top.minimum_value == doctest::Approx(0.0));
  const auto flat = min_entropy_fixed_max(sh, 0.25, 4, 2048, 1);
  CHECK(flat.minimum_value == doctest::Approx(std::log(4.0)));
  const auto mid = min_entropy_fixed_max(sh, 0.4, 3, 4096, 1);
  CHECK(mid.minimum_value == doctest::Approx(1.054920167986144).epsilon(1e-6));
  REQUIRE(std::holds_alternative<ProbabilityVector>(mid.argmin));
  const auto v = std::get<ProbabilityVector>(mid.argmin).sorted_descending();
  CHECK(v[0] == doctest::Approx(0.4).epsilon(1e-6));
  CHECK(v[2] == doctest::Approx(0.2).epsilon(1e-4));
  CHECK(mid.samples_used == 4096);
  CHECK_THROWS(min_entropy_fixed_max(sh, 0.2, 3, 1024, 1));
}

TEST_CASE("fixed-max oracle: never below the closed form, close to it") {
  for (const auto& s : {EntropySpec::renyi(0.5), EntropySpec::tsallis(2.0), EntropySpec::renyi(0.0)}) {
    for (double p : {0.3, 0.45, 0.7}) {
      const auto r = min_entropy_fixed_max(s, p, 4, 4096, 3);
      CHECK(r.minimum_value >= h_min(s, p) - 1e-9);
      CHECK(r.minimum_value <= h_min(s, p) + 1e-4);
    }
  }
}

TEST_CASE("states oracle: examples") {
  const auto sh = EntropySpec::shannon();
  const auto id = min_entropy_sum_states(sh, sh, UnitaryMatrix::identity(3), Purity::Pure, 1024, 2);
  CHECK(id.minimum_value == doctest::Approx(0.0).epsilon(1e-9));
  const auto mub = min_entropy_sum_states(sh, sh, dft_matrix(2), Purity::Pure, 4096, 2);
  CHECK(mub.minimum_value >= maassen_uffink(1.0 / std::sqrt(2.0)) - 1e-9);
  CHECK(mub.minimum_value == doctest::Approx(std::log(2.0)).epsilon(1e-4));
  const auto q = min_entropy_sum_states(sh, sh, qubit_rotation(0.85), Purity::Pure, 4096, 2);
  CHECK(std::abs(q.minimum_value - 0.532768926535841) < 1e-4);
  REQUIRE(std::holds_alternative<ComplexVector>(q.argmin));
  CHECK(std::get<ComplexVector>(q.argmin).norm() == doctest::Approx(1.0));
  const auto m = min_entropy_sum_states(sh, sh, qubit_rotation(0.85), Purity::Mixed, 2048, 2);
  REQUIRE(std::holds_alternative<ComplexMatrix>(m.argmin));
  CHECK(m.minimum_value >= 0.532768926535841 - 1e-9);
}

TEST_CASE("states oracle: a larger budget never raises the minimum") {
  const auto r2 = EntropySpec::renyi(2.0);
  const auto rh = EntropySpec::renyi(0.5);
  const UnitaryMatrix t = haar_random_unitary(3, 17);
  double prev = 1e300;
  for (long budget : {1024L, 2048L, 4096L}) {
    const auto r = min_entropy_sum_states(r2, rh, t, Purity::Pure, budget, 8, 40);
    CHECK(r.minimum_value <= prev);
    CHECK(r.minimum_value >= proposition_bound(r2, rh, OverlapTriplet::nondegenerate(
                                                            overlap_of_unitary(t)))
                                     .value -
                                 1e-9);
    prev = r.minimum_value;
  }
  // Deterministic for a fixed seed.
  const auto a = min_entropy_sum_states(r2, rh, t, Purity::Pure, 1024, 8, 40);
  const auto b = min_entropy_sum_states(r2, rh, t, Purity::Pure, 1024, 8, 40);
  CHECK(a.minimum_value == b.minimum_value);
}

TEST_CASE("Landau-Pollak grid oracle") {
  const auto inf = EntropySpec::renyi(EntropicIndex::infinity());
  CHECK(min_sum_lp_grid(inf, inf, OverlapTriplet::nondegenerate(1.0), 100).minimum_value ==
        doctest::Approx(0.0));
  for (double c : {0.4, 0.8}) {
    const auto t = OverlapTriplet::nondegenerate(c);
    const auto r = min_sum_lp_grid(inf, inf, t, 10000);
    CHECK(r.minimum_value >= proposition_bound(inf, inf, t).value - 1e-9);
    CHECK(r.minimum_value == doctest::Approx(deutsch(c)).epsilon(1e-3));
    REQUIRE(std::holds_alternative<MaxProbabilityPair>(r.argmin));
  }
  const auto sh = EntropySpec::shannon();
  const OverlapTriplet corner(0.9, 0.9, 0.8);
  CHECK(min_sum_lp_grid(sh, sh, corner, 2000).minimum_value ==
        doctest::Approx(analytic_lower(sh, sh, corner)).epsilon(1e-9));
}

TEST_CASE("majorization pairs") {
  for (int n : {2, 4, 7}) {
    for (const auto& [p, q] : majorization_pairs(n, 100, n)) {
      CHECK(is_majorized_by(p, q));
      CHECK(is_majorized_by(ProbabilityVector::uniform(n), q));
      CHECK(is_majorized_by(p, ProbabilityVector::delta(n)));
    }
  }
}

}  // TEST_SUITE
