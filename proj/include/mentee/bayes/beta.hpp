#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "mentee/bayes/belief.hpp"

namespace mentee {

// KL(Beta(alpha + 1, beta) || Beta(alpha, beta)).
double beta_kl(double alpha, double beta);
// KL(Beta(a1, b1) || Beta(a0, b0)) for arbitrary positive parameters.
double beta_kl_general(double a1, double b1, double a0, double b0);
// Expected one-step information gain of pulling an arm with n_plus successes
// and n_minus failures under a uniform Beta(1, 1) prior.
double beta_bandit_expected_ig(double n_plus, double n_minus);

// Bernoulli bandit with independent Beta(1, 1) priors per arm. Rewards are
// 0 or 1 and there are no observations. A belief built from fixed arm biases
// is degenerate and stands for a single environment.
class BetaBanditBelief final : public EnvironmentBelief {
 public:
  explicit BetaBanditBelief(std::size_t arms);
  explicit BetaBanditBelief(std::vector<double> fixed_bias);

  std::unique_ptr<EnvironmentBelief> clone() const override;
  std::size_t num_actions() const override { return successes_.size(); }
  RewardRange reward_range() const override { return {0.0, 1.0}; }
  std::size_t max_percepts() const override { return 2; }
  std::vector<WeightedPercept> predictive(Action action) const override;
  void update(const InteractionStep& step) override;
  double information_gain_since(const EnvironmentBelief& before) const override;
  std::unique_ptr<EnvironmentBelief> sample_environment(Rng& rng) const override;
  bool degenerate() const override { return bias_.has_value(); }
  std::size_t timestep() const override { return timestep_; }

  double successes(std::size_t arm) const { return successes_[arm]; }
  double failures(std::size_t arm) const { return failures_[arm]; }

 private:
  std::vector<double> successes_;
  std::vector<double> failures_;
  std::optional<std::vector<double>> bias_;
  std::size_t timestep_ = 0;
};

}  // namespace mentee
