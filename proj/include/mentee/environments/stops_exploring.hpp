#pragma once

#include <cstddef>
#include <optional>

#include "mentee/core/model.hpp"

namespace mentee {

// nu_i: action 0 pays 1/2; action 1 pays 1 once t >= i and 0 before.
// An empty threshold is nu_infinity, where action 1 never pays.
class StopsExploringEnv final : public Environment {
 public:
  explicit StopsExploringEnv(std::optional<std::size_t> threshold) : threshold_(threshold) {}

  std::size_t num_actions() const override { return 2; }
  std::vector<Percept> percept_space() const override;
  RewardRange reward_range() const override { return {0.0, 1.0}; }
  double probability(HistoryView history, Action action, const Percept& percept) const override;

  double reward(std::size_t t, Action action) const;
  std::optional<std::size_t> threshold() const { return threshold_; }

 private:
  std::optional<std::size_t> threshold_;
};

}  // namespace mentee
