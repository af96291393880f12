#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mentee/bayes/belief.hpp"
#include "mentee/planners/expectimax.hpp"

namespace mentee {

struct PlannerConfig {
  std::size_t horizon = 6;
  std::size_t samples = 1200;
  double ucb_c = std::sqrt(2.0);
  double gamma = 0.99;
  Objective objective = Objective::Reward;
  // Nats per step used to scale information-gain values inside the UCB rule.
  double ig_scale = 2.0;
};

struct ActionStats {
  std::size_t visits = 0;
  double mean = 0.0;  // raw, unnormalised return estimate
};

struct RhoUctResult {
  Action action = 0;
  double value = 0.0;
  std::size_t root_visits = 0;
  std::vector<ActionStats> actions;
};

// Monte-Carlo tree search over the belief with a fresh tree per call. Each
// sample runs on its own copy of the belief, unvisited actions are tried
// uniformly at random, and new leaves are valued by a uniform-random rollout.
RhoUctResult rho_uct(const EnvironmentBelief& belief, const PlannerConfig& config, std::uint64_t seed);

void write_tree_stats(std::ostream& out, const RhoUctResult& result);
std::string tree_stats_string(const RhoUctResult& result);

}  // namespace mentee
