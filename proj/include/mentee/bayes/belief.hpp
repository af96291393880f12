#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "mentee/bayes/mixture.hpp"
#include "mentee/core/rng.hpp"
#include "mentee/core/types.hpp"

namespace mentee {

// A posterior over environments together with whatever state is needed to
// evaluate the Bayes mixture xi(. | h a) on the history it has absorbed.
class EnvironmentBelief {
 public:
  virtual ~EnvironmentBelief() = default;

  virtual std::unique_ptr<EnvironmentBelief> clone() const = 0;
  virtual std::size_t num_actions() const = 0;
  virtual RewardRange reward_range() const = 0;
  // Upper bound on the number of percepts predictive() returns.
  virtual std::size_t max_percepts() const = 0;

  // xi(. | h a) restricted to percepts with positive probability.
  virtual std::vector<WeightedPercept> predictive(Action action) const = 0;
  virtual double probability(Action action, const Percept& percept) const;
  virtual Percept sample_percept(Action action, Rng& rng) const;

  // Absorbs one step; throws EvidenceError when no model allows it.
  virtual void update(const InteractionStep& step) = 0;
  // KL(w(.|h') || w(.|h)) where *this absorbed h' and `before` absorbed h.
  virtual double information_gain_since(const EnvironmentBelief& before) const = 0;
  // A degenerate belief concentrated on one environment drawn from the posterior.
  virtual std::unique_ptr<EnvironmentBelief> sample_environment(Rng& rng) const = 0;
  virtual bool degenerate() const = 0;

  virtual std::size_t timestep() const = 0;
  // Index of the situation the mentor model conditions on (grid cell).
  virtual std::size_t context() const { return 0; }
  // Tag of the environment a degenerate belief stands for.
  virtual std::uint64_t identity() const { return 0; }
};

// A posterior over mentor policies.
class PolicyBelief {
 public:
  virtual ~PolicyBelief() = default;

  virtual std::unique_ptr<PolicyBelief> clone() const = 0;
  virtual std::size_t num_actions() const = 0;
  // pi-bar(. | h) in the given context.
  virtual std::vector<double> predictive(std::size_t context) const = 0;
  // Absorbs an action chosen by the mentor.
  virtual void update(std::size_t context, Action action) = 0;
  // Called for every step, explored or not, after any update().
  virtual void advance(const InteractionStep&) {}
  virtual double information_gain_since(const PolicyBelief& before) const = 0;
  virtual bool degenerate() const = 0;
};

// Independent environment and mentor posteriors; the joint information gain
// is the sum of the two KL terms.
class JointBelief {
 public:
  JointBelief(std::unique_ptr<EnvironmentBelief> env, std::unique_ptr<PolicyBelief> mentor);
  JointBelief(const JointBelief& other);
  JointBelief& operator=(const JointBelief& other);
  JointBelief(JointBelief&&) noexcept = default;
  JointBelief& operator=(JointBelief&&) noexcept = default;

  void update(const InteractionStep& step);
  double information_gain_since(const JointBelief& before) const;
  bool degenerate() const;

  const EnvironmentBelief& env() const { return *env_; }
  EnvironmentBelief& env() { return *env_; }
  bool has_mentor() const { return mentor_ != nullptr; }
  const PolicyBelief& mentor() const { return *mentor_; }

 private:
  std::unique_ptr<EnvironmentBelief> env_;
  std::unique_ptr<PolicyBelief> mentor_;
};

}  // namespace mentee
