#include "mentee/agents/mentee.hpp"

#include <stdexcept>

namespace mentee {

MenteeAgent::MenteeAgent(JointBelief belief, ExplorationParams exploration, PlanningOptions planning,
                         std::uint64_t seed)
    : belief_(std::move(belief)),
      exploration_(exploration),
      planning_(planning),
      seed_(seed),
      rng_(Rng::derive(seed, 0)),
      cache_(exploration.m_max) {
  if (!belief_.has_mentor()) throw std::invalid_argument("mentee needs a mentor model");
}

Decision MenteeAgent::act() {
  const std::size_t t = belief_.env().timestep();
  // Two sub-streams per step: information gain and planning.
  auto values = expected_ig_values(belief_, exploration_.m_max, exploration_, Rng::derive(seed_, 2 * t + 1)).values;
  for (double& v : values) v = ig_units(v, exploration_);
  cache_.push(values);
  const double beta = beta_override_ ? *beta_override_ : exploration_probability(cache_, t, exploration_).beta;
  if (rng_.bernoulli(beta)) return {true, 0, beta};
  return {false, plan_action(belief_.env(), planning_, Rng::derive(seed_, 2 * t + 2)), beta};
}

void MenteeAgent::observe(const InteractionStep& step) { belief_.update(step); }

}  // namespace mentee
