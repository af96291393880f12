#pragma once

#include "mentee/core/model.hpp"

namespace mentee {

// Two arms, rewards {0, 1}, no observations; P(r = a_t) = 2/3.
class TwoArmedBandit final : public Environment {
 public:
  std::size_t num_actions() const override { return 2; }
  std::vector<Percept> percept_space() const override { return {{0, 0.0}, {0, 1.0}}; }
  RewardRange reward_range() const override { return {0.0, 1.0}; }
  double probability(HistoryView history, Action action, const Percept& percept) const override;
};

double bandit_prob(Action action, double reward);

}  // namespace mentee
