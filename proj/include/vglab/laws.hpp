#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vglab/group.hpp"
#include "vglab/report.hpp"

namespace vglab {

/// Instance-family parameters shared by all suites. Quantales and groups are
/// given in the compact spec syntax ("chain:3", "pplus"; "cyclic:4", "s3").
struct LawConfig {
  std::vector<std::string> quantales = {"chain:3", "lukasiewicz_chain:3"};
  std::vector<std::string> groups = {"cyclic:2", "cyclic:3", "cyclic:4",
                                     "klein", "s3"};
  int max_group_order = 6;
  std::size_t structure_bound = 100000;
  std::size_t split_bound = 100000;
  std::size_t strong_check_budget = 64;
  std::size_t samples = 1000;     // sample count on infinite carriers
  std::size_t sampled_instances = 100;
  std::uint64_t seed = 0xC0FFEE;  // VGLAB_SEED overrides in the CLI
  unsigned jobs = 1;
  bool fail_fast = false;
};

struct SuiteInfo {
  std::string id;
  std::string claim;
};

/// Registry order is fixed; every suite is deterministic for a fixed config.
const std::vector<SuiteInfo>& suite_registry();

/// Runs one registered suite; unknown ids raise ValidationError listing the
/// registry.
LawReport run_suite(const std::string& id, const LawConfig& config);

/// Runs every suite in registry order; with fail_fast stops after the first
/// failing report.
std::vector<LawReport> run_all(const LawConfig& config);

/// Helpers shared with the CLI.
FiniteGroup parse_group_spec(const std::string& spec);

}  // namespace vglab
