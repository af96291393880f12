#include "mentee/agents/baselines.hpp"

#include <algorithm>

#include "mentee/core/discount.hpp"
#include "mentee/exploration/knowledge_seeking.hpp"

namespace mentee {

ThompsonAgent::ThompsonAgent(std::unique_ptr<EnvironmentBelief> belief, PlanningOptions planning,
                             std::uint64_t seed)
    : belief_(std::move(belief)), planning_(planning), seed_(seed), rng_(Rng::derive(seed, 0)) {}

void ThompsonAgent::resample() { sample_ = belief_->sample_environment(rng_); }

Decision ThompsonAgent::act() {
  const std::size_t t = belief_->timestep();
  if (!sample_ || t >= interval_end_) {
    ++interval_;
    const double eps = 1.0 / static_cast<double>(interval_ + 1);
    const std::size_t length =
        effective_horizon(DiscountSchedule::geometric(planning_.config.gamma), eps, t);
    interval_end_ = t + std::max<std::size_t>(1, length);
    resample();
  }
  return {false, plan_action(*sample_, planning_, Rng::derive(seed_, t + 1)), 0.0};
}

void ThompsonAgent::observe(const InteractionStep& step) {
  belief_->update(step);
  if (!sample_) return;
  try {
    sample_->update(step);
  } catch (const EvidenceError&) {
    resample();
  }
}

BayesExpAgent::BayesExpAgent(std::unique_ptr<EnvironmentBelief> belief, PlanningOptions planning,
                             KnowledgeSeekingOptions ks, std::uint64_t seed, Threshold threshold)
    : belief_(std::move(belief)),
      planning_(planning),
      ks_(ks),
      seed_(seed),
      threshold_(threshold ? std::move(threshold) : Threshold(bayesexp_threshold)) {}

Decision BayesExpAgent::act() {
  const std::size_t t = belief_->timestep();
  const std::uint64_t ks_seed = Rng::derive(seed_, 2 * t + 1);
  if (burst_remaining_ > 0) {
    const auto plan = ks_exploration_value(*belief_, burst_remaining_, planning_.config, ks_.enumeration_budget, ks_seed);
    --burst_remaining_;
    return {false, plan.action, 0.0};
  }
  const auto plan = ks_exploration_value(*belief_, ks_.horizon, planning_.config, ks_.enumeration_budget, ks_seed);
  if (plan.value > threshold_(t)) {
    burst_remaining_ = ks_.horizon - 1;
    ++bursts_;
    return {false, plan.action, 0.0};
  }
  return {false, plan_action(*belief_, planning_, Rng::derive(seed_, 2 * t + 2)), 0.0};
}

void BayesExpAgent::observe(const InteractionStep& step) { belief_->update(step); }

InqAgent::InqAgent(std::unique_ptr<EnvironmentBelief> belief, PlanningOptions planning,
                   ExplorationParams exploration, std::uint64_t seed)
    : belief_(std::move(belief)),
      planning_(planning),
      exploration_(exploration),
      seed_(seed),
      rng_(Rng::derive(seed, 0)),
      cache_(exploration.m_max) {}

Decision InqAgent::act() {
  const std::size_t t = belief_->timestep();
  const std::size_t m_max = exploration_.m_max;
  PlannerConfig per_horizon = planning_.config;
  per_horizon.samples = std::max<std::size_t>(1, planning_.config.samples / m_max);
  std::vector<double> values(m_max);
  Action explore_action = 0;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const auto plan = ks_exploration_value(*belief_, m, per_horizon, exploration_.enumeration_budget,
                                           Rng::derive(seed_, (m_max + 2) * t + 1 + m));
    values[m - 1] = ig_units(plan.value, exploration_);
    explore_action = plan.action;
  }
  cache_.push(values);
  const double beta = exploration_probability(cache_, t, exploration_).beta;
  if (rng_.bernoulli(beta)) return {false, explore_action, beta};
  return {false, plan_action(*belief_, planning_, Rng::derive(seed_, (m_max + 2) * t + 1)), beta};
}

void InqAgent::observe(const InteractionStep& step) { belief_->update(step); }

}  // namespace mentee
