#pragma once

#include <cstdint>
#include <optional>

#include "mentee/agents/agent.hpp"
#include "mentee/agents/planner.hpp"
#include "mentee/bayes/belief.hpp"
#include "mentee/core/rng.hpp"
#include "mentee/exploration/exploration_probability.hpp"

namespace mentee {

// Defers to the mentor with probability beta computed from the expected
// information gain of mentor-chosen bursts; otherwise exploits.
class MenteeAgent final : public Agent {
 public:
  MenteeAgent(JointBelief belief, ExplorationParams exploration, PlanningOptions planning, std::uint64_t seed);

  Decision act() override;
  void observe(const InteractionStep& step) override;
  std::string name() const override { return "mentee"; }

  // Replaces the computed beta (cache updates still happen).
  void set_beta_override(std::optional<double> beta) { beta_override_ = beta; }
  const JointBelief& belief() const { return belief_; }
  const IGCache& cache() const { return cache_; }

 private:
  JointBelief belief_;
  ExplorationParams exploration_;
  PlanningOptions planning_;
  std::uint64_t seed_;
  Rng rng_;
  IGCache cache_;
  std::optional<double> beta_override_;
};

}  // namespace mentee
