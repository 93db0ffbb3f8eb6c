#ifndef CLUSPAT_DRIVER_HPP
#define CLUSPAT_DRIVER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "cluspat/json_io.hpp"
#include "cluspat/pattern.hpp"
#include "cluspat/semifield.hpp"

namespace cluspat {

// Exit codes shared by every subcommand: usage or input problems map to 2,
// failed mathematical identities to 3.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

struct MutateConfig {
  IntMatrix matrix;
  Walk walk;
  VerifyLevel level = VerifyLevel::fast;
  // When set, the dump also carries the cluster variables and coefficients
  // at the endpoint, separated over this coefficient semifield.
  std::optional<SemifieldKind> semifield;
};

struct DualityConfig {
  IntMatrix matrix;
  int max_walk_len = 4;
};

struct ExtendConfig {
  IntMatrix matrix;
  std::optional<Walk> walk;
};

struct SuiteConfig {
  int cases = 200;
  int rank_min = 2;
  int rank_max = 3;
  int max_entry = 3;
  int max_walk_len = 6;
  std::uint64_t seed = 7;
  // Sampler mix: how often an index is fully disconnected, and how often
  // columns get scaled to force a nontrivial symmetrizer.
  int zero_column_percent = 20;
  int scale_percent = 40;
  // Tractability frontier for sampled walks: the F-matrix recursion predicts
  // the support box of every F-polynomial and the walk truncates beyond it.
  long support_cap = 20000;
};

// The full identity battery for one (B, walk) instance: the checked walk,
// full-seed involution, initial-seed transforms against from-scratch
// re-rooted walks for every direction, the transposition dualities, the
// principal-extension block identities, and the principal-coefficient
// Laurent check with the separation-formula cross-validation.
struct CaseOutcome {
  bool pass = true;
  std::vector<std::string> failures;
  bool zero_column = false;
  bool nontrivial_symmetrizer = false;

  void fail(std::string message) {
    pass = false;
    failures.push_back(std::move(message));
  }
};

CaseOutcome verify_identities(const ExchangeMatrix& b, const Walk& walk);

// The deterministic case stream behind cmd_random_suite: one (B, walk) pair
// per case, reproducible from the seed alone.
std::vector<std::pair<ExchangeMatrix, Walk>> sample_suite_cases(const SuiteConfig& config);

nlohmann::json cmd_mutate(const MutateConfig& config);
nlohmann::json cmd_check_duality(const DualityConfig& config);
nlohmann::json cmd_extend(const ExtendConfig& config);
nlohmann::json cmd_tables_a2();
nlohmann::json cmd_random_suite(const SuiteConfig& config);

bool report_passed(const nlohmann::json& report);

}  // namespace cluspat

#endif
