#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookblock/partitions.hpp"

namespace hookblock {

enum class CheckStatus { Pass, Fail, SkippedTier };

std::string status_name(CheckStatus s);  // "pass", "fail", "skipped-tier"

struct CheckEntry {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::json details;
};

struct VerifyOptions {
  std::string suite = "all";  // combinatorics | complexes | oracle | yoneda | all
  int p = 2;
  int n = 0;  // 0 means n = p
  std::uint64_t seed = 1;
  bool tier_override = false;
};

struct VerificationReport {
  std::string suite;
  int p = 2;
  int n = 2;
  std::uint64_t seed = 1;
  std::vector<CheckEntry> checks;

  bool failed() const;
  nlohmann::json to_json() const;
};

// Largest p for which the oracle suite runs without an override.
inline constexpr int kOracleTier = 3;
// Largest p for which module-level computations are attempted at all.
inline constexpr int kModuleTier = 5;
inline constexpr int kRandomCores = 200;
inline constexpr int kMaxCoreSize = 30;

// Throws std::invalid_argument for unknown suites and std::domain_error when the
// oracle suite is requested beyond its tier without an override.
VerificationReport run_verification(const VerifyOptions& options);

// The empty core followed by a seeded sample of at most `count` nonempty p-cores of size <= max_size.
std::vector<Partition> sample_cores(int p, int count, int max_size, std::uint64_t seed);

}  // namespace hookblock
