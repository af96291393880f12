#pragma once

#include <cstddef>
#include <vector>

#include "mentee/core/rng.hpp"
#include "mentee/core/types.hpp"

namespace mentee {

// nu(o r | h a), exposed as an exact query plus a sampler.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::size_t num_actions() const = 0;
  // Every percept that can have positive probability.
  virtual std::vector<Percept> percept_space() const = 0;
  virtual RewardRange reward_range() const = 0;
  virtual double probability(HistoryView history, Action action, const Percept& percept) const = 0;

  // Inverse-CDF draw over percept_space(); override when a direct sampler is cheaper.
  virtual Percept sample(HistoryView history, Action action, Rng& rng) const;
};

// pi(a | h).
class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::size_t num_actions() const = 0;
  virtual double probability(HistoryView history, Action action) const = 0;
  virtual Action sample(HistoryView history, Rng& rng) const;
};

}  // namespace mentee
