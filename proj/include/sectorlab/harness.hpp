#pragma once

// Seeded campaign engine: per-trial random streams, optional worker threads,
// order-independent aggregation, counterexample shrinking and replay.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sectorlab/theorems.hpp"

namespace sectorlab {

inline constexpr int kReportSchemaVersion = 1;

struct CampaignConfig {
  std::string theorem_id;
  int trials = 100;
  GeneratorConfig generator;
  std::string map_id;
  std::vector<std::string> mean_ids;
  std::string function_id;
  TolerancePolicy tolerance;
  int threads = 1;  // not part of the report; results do not depend on it

  void validate() const;
  nlohmann::json to_json() const;
  static CampaignConfig from_json(const nlohmann::json& j);
};

/// Config with the registry defaults of `theorem_id` filled in.
CampaignConfig make_campaign(const std::string& theorem_id, int trials = 100, std::uint64_t seed = 1);

/// Stream seed for one trial, a hash of (seed, trial index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct Counterexample {
  std::uint64_t trial = 0;
  CheckOutcome outcome;
  Instance instance;
  Instance shrunk;
  CheckOutcome shrunk_outcome;
};

struct TrialReport {
  CampaignConfig config;
  std::uint64_t trials_run = 0;
  std::uint64_t hypothesis_hits = 0;
  std::uint64_t passes = 0;
  std::map<std::string, std::uint64_t> filter_reasons;

  bool has_worst = false;
  double worst_residual = 0.0;
  double worst_tolerance = 0.0;
  std::uint64_t worst_trial = 0;
  nlohmann::json worst_witness;

  std::vector<Counterexample> counterexamples;  // first few failures, by trial index
  std::uint64_t counterexample_count = 0;
  std::string sample_digest;
  double wall_time = 0.0;

  bool all_pass() const noexcept { return passes == hypothesis_hits; }
  double filter_rate() const noexcept {
    return trials_run == 0 ? 0.0 : 1.0 - static_cast<double>(hypothesis_hits) / static_cast<double>(trials_run);
  }

  nlohmann::json to_json(bool include_wall_time = true) const;
  static std::string csv_header();
  std::string csv_row() const;
};

inline constexpr std::size_t kMaxStoredCounterexamples = 10;
inline constexpr int kMaxShrinkSteps = 200;

TrialReport run_campaign(const CampaignConfig& cfg);

struct ShrinkResult {
  Instance instance;
  CheckOutcome outcome;
  int steps_tried = 0;
  int steps_accepted = 0;
};

/// Greedy shrinking: drop an index, halve off-diagonal mass, round entries.
/// A step is kept only when the instance still fails with its hypotheses
/// satisfied. Returns the input unchanged when it does not fail.
ShrinkResult shrink_counterexample(const std::string& theorem_id, const Instance& witness,
                                   const TolerancePolicy& tol = {});

struct ReplayResult {
  TrialReport original;
  TrialReport replayed;
  bool counters_match = false;
  bool digest_match = false;
  bool worst_match = false;
  bool matches() const noexcept { return counters_match && digest_match && worst_match; }
};

TrialReport report_from_json(const nlohmann::json& j);
ReplayResult replay(const std::filesystem::path& report_path, int threads = 1);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace sectorlab
