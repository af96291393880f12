#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "mentee/bayes/belief.hpp"
#include "mentee/core/model.hpp"

namespace mentee {

// Bayes mixture over an explicit, ordered list of environments. Posterior
// weights are maintained incrementally; models reaching weight 0 are dropped.
// With a tolerance set, predictive() uses the truncated posterior recomputed
// from the stored history, as the reference pseudocode does.
class FiniteMixtureBelief final : public EnvironmentBelief {
 public:
  FiniteMixtureBelief(std::vector<std::shared_ptr<const Environment>> models, std::vector<double> prior,
                      std::optional<double> tolerance = std::nullopt);

  std::unique_ptr<EnvironmentBelief> clone() const override;
  std::size_t num_actions() const override;
  RewardRange reward_range() const override { return range_; }
  std::size_t max_percepts() const override { return percepts_.size(); }
  std::vector<WeightedPercept> predictive(Action action) const override;
  void update(const InteractionStep& step) override;
  double information_gain_since(const EnvironmentBelief& before) const override;
  std::unique_ptr<EnvironmentBelief> sample_environment(Rng& rng) const override;
  bool degenerate() const override { return active_.size() == 1; }
  std::size_t timestep() const override { return history_.size(); }
  std::uint64_t identity() const override;

  // Posterior weight of model i (0 for dropped models).
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  const History& history() const { return history_; }
  std::size_t num_models() const { return models_.size(); }

 private:
  std::vector<std::shared_ptr<const Environment>> models_;
  std::vector<double> prior_;
  std::vector<double> weights_;
  std::vector<std::size_t> active_;
  std::vector<Percept> percepts_;
  RewardRange range_;
  std::optional<double> tolerance_;
  History history_;
};

// Bayes mixture over an explicit list of mentor policies.
class FinitePolicyMixture final : public PolicyBelief {
 public:
  FinitePolicyMixture(std::vector<std::shared_ptr<const Policy>> models, std::vector<double> prior);

  std::unique_ptr<PolicyBelief> clone() const override;
  std::size_t num_actions() const override;
  std::vector<double> predictive(std::size_t context) const override;
  void update(std::size_t context, Action action) override;
  void advance(const InteractionStep& step) override { history_.append(step); }
  double information_gain_since(const PolicyBelief& before) const override;
  bool degenerate() const override;

  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<std::shared_ptr<const Policy>> models_;
  std::vector<double> weights_;
  History history_;
};

}  // namespace mentee
