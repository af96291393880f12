#include "mentee/planners/expectimax.hpp"

#include <limits>
#include <stdexcept>

namespace mentee {

std::size_t search_tree_size(const EnvironmentBelief& belief, std::size_t depth) {
  const std::size_t branch = belief.num_actions() * belief.max_percepts();
  std::size_t total = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    if (branch != 0 && total > std::numeric_limits<std::size_t>::max() / branch) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= branch;
  }
  return total;
}

namespace {

PlanResult search(const EnvironmentBelief& node, const EnvironmentBelief& root, const DiscountSchedule& schedule,
                  std::size_t depth, Objective objective) {
  if (depth == 0) {
    return {0, objective == Objective::InformationGain ? node.information_gain_since(root) : 0.0};
  }
  const double gamma_t = schedule.gamma(node.timestep());
  PlanResult best;
  bool have = false;
  for (Action a = 0; a < node.num_actions(); ++a) {
    double value = 0.0;
    for (const auto& wp : node.predictive(a)) {
      auto child = node.clone();
      child->update({false, a, wp.percept});
      const double next = search(*child, root, schedule, depth - 1, objective).value;
      const double immediate = objective == Objective::Reward ? gamma_t * wp.percept.reward : 0.0;
      value += (immediate + next) * wp.probability;
    }
    if (!have || value > best.value) {
      best = {a, value};
      have = true;
    }
  }
  return best;
}

}  // namespace

PlanResult expectimax(const EnvironmentBelief& belief, const DiscountSchedule& schedule, std::size_t depth,
                      std::size_t budget, Objective objective) {
  if (search_tree_size(belief, depth) > budget) {
    throw std::length_error("expectimax: search tree exceeds the budget; use rho_uct");
  }
  return search(belief, belief, schedule, depth, objective);
}

}  // namespace mentee
