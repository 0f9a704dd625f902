#pragma once

#include <cstdint>
#include <limits>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "sparsched/linsys.hpp"

namespace sparsched {

/// One selection event. phase 1 = kernel coverage, phase 2 = rank
/// completion, phase 3 = cost improvement. Naive-greedy picks log as
/// phase 3 events.
struct PhaseEvent {
  int phase = 0;
  int step = 0;
  std::vector<int> channels;  // 0-based here, 1-based in files
  int subspace_dim = -1;      // dim of the covered subspace (phase 1 only)
  double cost = std::numeric_limits<double>::quiet_NaN();

  bool operator==(const PhaseEvent&) const = default;
};

/// Everything a design run produces. Serializes to JSON via sparsched/io.hpp
/// and round-trips field for field.
struct DesignReport {
  Schedule schedule;
  std::string algorithm;  // "s-greedy" | "naive" | "mcmc" | "oracle"
  MetricKind metric = MetricKind::TraceInverse;
  double cost = std::numeric_limits<double>::infinity();  // at eps = 0
  double eps_used = 0.0;  // slack that made the final evaluation finite
  int gramian_rank = 0;
  FeasibilityReport feasibility;
  DesignConfig config;
  std::uint64_t seed = 0;
  double seconds = 0.0;
  std::vector<PhaseEvent> log;
  std::vector<std::string> warnings;
  nlohmann::json extra;  // algorithm-specific diagnostics
};

}  // namespace sparsched
