// The acceptance criteria suite, shared by the acceptance binary and the
// CLI `selftest` subcommand.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcg {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Deterministic for a fixed seed.  Default seed is 2026; the environment
// variable MCG_SEED overrides it.
std::uint64_t default_seed();

CriterionResult run_criterion(int number, std::uint64_t seed);
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed);

}  // namespace mcg
