#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>

#include "mentee/agents/agent.hpp"
#include "mentee/agents/planner.hpp"
#include "mentee/bayes/belief.hpp"
#include "mentee/core/rng.hpp"
#include "mentee/exploration/exploration_probability.hpp"

namespace mentee {

// Samples an environment from the posterior and plans against it for an
// effective-horizon interval, with tolerance 1/(j+1) for the j-th interval.
// A sample contradicted by what happens is redrawn on the spot.
class ThompsonAgent final : public Agent {
 public:
  ThompsonAgent(std::unique_ptr<EnvironmentBelief> belief, PlanningOptions planning, std::uint64_t seed);

  Decision act() override;
  void observe(const InteractionStep& step) override;
  std::string name() const override { return "thompson"; }

  const EnvironmentBelief& belief() const { return *belief_; }
  // Tag of the current sample; 0 before the first act().
  std::uint64_t sample_identity() const { return sample_ ? sample_->identity() : 0; }
  std::size_t interval() const { return interval_; }
  std::size_t interval_end() const { return interval_end_; }

 private:
  void resample();

  std::unique_ptr<EnvironmentBelief> belief_;
  std::unique_ptr<EnvironmentBelief> sample_;
  PlanningOptions planning_;
  std::uint64_t seed_;
  Rng rng_;
  std::size_t interval_ = 0;
  std::size_t interval_end_ = 0;
};

struct KnowledgeSeekingOptions {
  std::size_t horizon = 6;
  std::size_t enumeration_budget = 256;
};

using Threshold = std::function<double(std::size_t t)>;

// Explores for a burst of `horizon` steps whenever the knowledge-seeking
// value exceeds the threshold (1 / sqrt(t + 1) unless given), re-planning the
// remaining burst each step.
class BayesExpAgent final : public Agent {
 public:
  BayesExpAgent(std::unique_ptr<EnvironmentBelief> belief, PlanningOptions planning, KnowledgeSeekingOptions ks,
                std::uint64_t seed, Threshold threshold = {});

  Decision act() override;
  void observe(const InteractionStep& step) override;
  std::string name() const override { return "bayesexp"; }

  bool exploring() const { return burst_remaining_ > 0; }
  std::size_t bursts() const { return bursts_; }

 private:
  std::unique_ptr<EnvironmentBelief> belief_;
  PlanningOptions planning_;
  KnowledgeSeekingOptions ks_;
  std::uint64_t seed_;
  Threshold threshold_;
  std::size_t burst_remaining_ = 0;
  std::size_t bursts_ = 0;
};

// Explores with a beta-style probability built from knowledge-seeking values
// V_m for m = 1..m_max, taking the longest-horizon knowledge-seeking action.
class InqAgent final : public Agent {
 public:
  InqAgent(std::unique_ptr<EnvironmentBelief> belief, PlanningOptions planning, ExplorationParams exploration,
           std::uint64_t seed);

  Decision act() override;
  void observe(const InteractionStep& step) override;
  std::string name() const override { return "inq"; }

  const IGCache& cache() const { return cache_; }

 private:
  std::unique_ptr<EnvironmentBelief> belief_;
  PlanningOptions planning_;
  ExplorationParams exploration_;
  std::uint64_t seed_;
  Rng rng_;
  IGCache cache_;
};

}  // namespace mentee
