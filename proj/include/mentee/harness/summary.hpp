#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mentee/harness/experiment.hpp"

namespace mentee {

struct Stat {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single value
  double min = 0.0;
  double max = 0.0;
};

// Throws std::invalid_argument on empty input.
Stat summarize_values(std::span<const double> values);

struct ExperimentSummary {
  std::size_t runs = 0;
  std::vector<Stat> avg_reward;  // per timestep, across runs
  Stat final_avg_reward;
  Stat defer_fraction;
  Stat beta;  // per-run mean beta
  double trap_frequency = 0.0;
};

// Runs must share a length; throws std::invalid_argument otherwise or when empty.
ExperimentSummary summarize(const std::vector<RunRecord>& records);

}  // namespace mentee
