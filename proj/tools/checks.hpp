#pragma once

#include "eurbound/entropy.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace eur::cli {

struct CheckOptions {
  std::uint64_t seed = 0;
  long budget = 10000;
  int n = 3;
  int samples = 10000;
  std::vector<double> overlaps;  // empty: suite default
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  long violations = 0;
  double worst = 0.0;  // largest violation (or gap) seen, 0 when none
  std::string worst_case;
};

/// Spec pairs used by the soundness and qubit suites.
std::vector<std::pair<EntropySpec, EntropySpec>> spec_pair_battery();
/// Single specs covering every family and index limit.
std::vector<EntropySpec> spec_battery();

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const CheckOptions& options);

}  // namespace eur::cli
