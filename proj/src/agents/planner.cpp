#include "mentee/agents/planner.hpp"

#include "mentee/core/discount.hpp"

namespace mentee {

Action plan_action(const EnvironmentBelief& belief, const PlanningOptions& options, std::uint64_t seed) {
  if (options.exact) {
    return expectimax(belief, DiscountSchedule::geometric(options.config.gamma), options.config.horizon,
                      kDefaultExpectimaxBudget, Objective::Reward)
        .action;
  }
  PlannerConfig config = options.config;
  config.objective = Objective::Reward;
  return rho_uct(belief, config, seed).action;
}

}  // namespace mentee
