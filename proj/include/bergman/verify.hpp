#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bergman/matroid.hpp"
#include "bergman/treespace.hpp"
#include "bergman/weights.hpp"

namespace bergman {

// Property suites exercised both by the command line and by the release
// checks. Every randomized suite is reproducible from the seed alone.
struct SuiteOptions {
  int n = 0;        // 0 = suite default (often: sweep a range)
  int max_n = 0;    // 0 = suite default
  int samples = 0;  // 0 = suite default
  std::uint64_t seed = 20240817;
  std::size_t budget = kDefaultEnumerationBudget;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

// seeded generators shared across suites
Rational random_small_rational(std::mt19937_64& rng);
WeightVector random_weight_vector(int n, std::mt19937_64& rng);
DissimilarityMap random_dissimilarity(int n, std::mt19937_64& rng);
// heights drawn from a small palette so equal heights actually occur; some
// leaf-level heights are negative
EquidistantTree random_equidistant_tree(int n, std::mt19937_64& rng);

}  // namespace bergman
