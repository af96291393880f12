#include "mentee/exploration/knowledge_seeking.hpp"

#include <cmath>
#include <stdexcept>

namespace mentee {

PlanResult ks_exploration_value(const EnvironmentBelief& env, std::size_t m, const PlannerConfig& planner,
                                std::size_t enumeration_budget, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("ks_exploration_value: m must be at least 1");
  if (env.degenerate()) return {0, 0.0};
  if (search_tree_size(env, m) <= enumeration_budget) {
    // The schedule is irrelevant for a terminal objective.
    return expectimax(env, DiscountSchedule::finite(m), m, enumeration_budget, Objective::InformationGain);
  }
  PlannerConfig cfg = planner;
  cfg.horizon = m;
  cfg.objective = Objective::InformationGain;
  const auto r = rho_uct(env, cfg, seed);
  return {r.action, r.value};
}

bool bayesexp_should_explore(const EnvironmentBelief& env, double epsilon_t, std::size_t m,
                             const PlannerConfig& planner, std::size_t enumeration_budget, std::uint64_t seed) {
  if (env.degenerate()) return false;
  return ks_exploration_value(env, m, planner, enumeration_budget, seed).value > epsilon_t;
}

double bayesexp_threshold(std::size_t t) { return 1.0 / std::sqrt(static_cast<double>(t) + 1.0); }

}  // namespace mentee
