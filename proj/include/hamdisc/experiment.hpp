#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamdisc/bounds.hpp"
#include "hamdisc/core.hpp"
#include "hamdisc/search.hpp"

namespace hamdisc {

inline constexpr const char* kToolVersion = "hamdisc 0.1.0";

// Construction selector shared by the CLI and the experiment runner:
// random | jittered | antipodal | hamming | hamming-complement.
// For antipodal, size/2 pairs plus one unpaired point when size is odd.
// For the Hamming constructions, n must be 2^m - 1 and size, when nonzero,
// must match the construction.
Code build_construction(const std::string& name, int n, uint64_t size, uint64_t seed);

struct ExperimentSpec {
  std::string construction;
  std::string versus;  // optional second arm
  int n = 0;
  uint64_t size = 0;
  std::string objective;
  uint64_t trials = 1;
  uint64_t seed = 0;
  unsigned threads = 1;  // execution detail; never serialized
};

struct TrialRecord {
  uint64_t index = 0;
  uint64_t seed = 0;
  double value = 0.0;
  std::optional<Rational> exact;
};

struct ArmReport {
  std::string construction;
  std::vector<TrialRecord> trials;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::optional<Rational> mean_exact;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<ArmReport> arms;
  std::vector<BoundReport> bounds;
};

// Deterministic given the spec: trial t of arm a uses the derived seed
// substream_seed(substream_seed(master, a), t), so any single trial can be
// replayed in isolation. Output does not depend on the thread count.
ExperimentReport run_experiment(const ExperimentSpec& spec);

std::string experiment_json(const ExperimentReport& report);
std::string experiment_csv(const ExperimentReport& report);

nlohmann::ordered_json bound_report_to_json(const BoundReport& report);
nlohmann::ordered_json rational_to_json(const std::optional<Rational>& value);
std::string format_double_17(double value);  // 17 significant digits

}  // namespace hamdisc
