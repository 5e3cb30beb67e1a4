#pragma once

// Oracle cross-checks runnable from the command line: closed forms against
// Smith-normal-form homology, the X_p exponent law, and SNF invariants.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cartan/snf.hpp"

namespace cartan {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suites: "elementary", "xp-exponent", "snf", "all". Unknown names throw
/// std::invalid_argument.
std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed);

const std::vector<std::string>& suite_names();

/// Uniform entries in [-bound, bound].
IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng);

/// Product of at most `steps` elementary matrices (row additions with
/// multipliers in [-max_multiplier, max_multiplier], swaps, sign changes).
IntegerMatrix random_unimodular(std::size_t n, unsigned steps, long max_multiplier,
                                std::mt19937_64& rng);

}  // namespace cartan
