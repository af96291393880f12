#pragma once

#include <cstddef>

#include "mentee/bayes/belief.hpp"
#include "mentee/core/discount.hpp"

namespace mentee {

enum class Objective {
  Reward,
  // Expected KL between the final and the current posterior.
  InformationGain,
};

struct PlanResult {
  Action action = 0;
  double value = 0.0;
};

inline constexpr std::size_t kDefaultExpectimaxBudget = 1'000'000;

// Exact depth-limited expectimax over the mixture: each action's value is
// sum over percepts of (gamma_t r + next) xi(o r | h a), ties to the lowest
// action. Depth 0 returns (0, 0). Throws std::length_error when
// (|A| * max percepts)^depth exceeds the budget.
PlanResult expectimax(const EnvironmentBelief& belief, const DiscountSchedule& schedule, std::size_t depth,
                      std::size_t budget = kDefaultExpectimaxBudget, Objective objective = Objective::Reward);

// (|A| * max percepts)^depth, saturating at SIZE_MAX.
std::size_t search_tree_size(const EnvironmentBelief& belief, std::size_t depth);

}  // namespace mentee
