#pragma once

#include <cstdint>

#include "mentee/bayes/belief.hpp"
#include "mentee/planners/rho_uct.hpp"

namespace mentee {

// Reward-maximising planner used by the exploit branches. `exact` swaps
// rho-UCT for full expectimax to the same horizon, for small test problems.
struct PlanningOptions {
  PlannerConfig config;
  bool exact = false;
};

Action plan_action(const EnvironmentBelief& belief, const PlanningOptions& options, std::uint64_t seed);

}  // namespace mentee
