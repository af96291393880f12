#pragma once

#include <cstddef>
#include <cstdint>

#include "mentee/bayes/belief.hpp"
#include "mentee/planners/rho_uct.hpp"

namespace mentee {

// Policy maximising the expected m-step information gain about the
// environment (no mentor model). Exact expectimax over the terminal KL when
// the tree fits enumeration_budget, otherwise rho-UCT in information-gain
// mode with planner.samples samples. Returns (first action, value).
PlanResult ks_exploration_value(const EnvironmentBelief& env, std::size_t m, const PlannerConfig& planner,
                                std::size_t enumeration_budget, std::uint64_t seed);

// True iff the knowledge-seeking value exceeds epsilon_t.
bool bayesexp_should_explore(const EnvironmentBelief& env, double epsilon_t, std::size_t m,
                             const PlannerConfig& planner, std::size_t enumeration_budget, std::uint64_t seed);

// Default diminishing threshold 1 / sqrt(t + 1).
double bayesexp_threshold(std::size_t t);

}  // namespace mentee
