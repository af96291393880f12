#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "mentee/agents/agent.hpp"
#include "mentee/harness/config.hpp"

namespace mentee {

struct RunRecord {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  std::vector<double> rewards;
  std::vector<double> avg_rewards;  // mean of rewards 1..t
  std::vector<double> betas;
  std::vector<std::uint8_t> deferred;
  // 1-based timestep at which the trap was entered.
  std::optional<std::size_t> trap_step;

  std::size_t steps() const { return rewards.size(); }
  double defer_fraction() const;
  bool trapped_at(std::size_t timestep) const { return trap_step && timestep >= *trap_step; }
};

// Seeds of run i: base_seed + i, expanded into layout, environment, agent and
// mentor streams.
std::uint64_t run_seed(const ExperimentConfig& config, std::size_t run_index);

// The agent only sees what it could observe: geometry, rewards, the start and
// its wall mask.
std::unique_ptr<Agent> make_agent(const ExperimentConfig& config, const GridLayout& layout, std::uint64_t seed);

GridLayout run_layout(const ExperimentConfig& config, std::size_t run_index);
RunRecord run_single(const ExperimentConfig& config, std::size_t run_index);

using Progress = std::function<void(std::size_t finished, std::size_t total)>;

// All runs, on up to config.workers threads; records are in run order.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config, const Progress& progress = {});

}  // namespace mentee
