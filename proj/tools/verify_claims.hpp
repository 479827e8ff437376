#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace turan::cli {

struct ClaimResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string measured;  // the observed values backing the verdict
};

/// Runs every claim of the requested suite ("core", "lagrangian", "search",
/// "region" or "all") and returns one result per claim, in a fixed order.
std::vector<ClaimResult> run_claims(const std::string& suite, std::uint64_t seed);

bool suite_known(const std::string& suite);

}  // namespace turan::cli
