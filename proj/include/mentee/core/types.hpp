#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mentee {

using Action = std::uint32_t;
using Observation = std::uint32_t;

struct Percept {
  Observation observation = 0;
  double reward = 0.0;

  friend bool operator==(const Percept&, const Percept&) = default;
};

// h_t = e_t a_t o_t r_t; `explored` is set when the mentor chose the action.
struct InteractionStep {
  bool explored = false;
  Action action = 0;
  Percept percept;

  friend bool operator==(const InteractionStep&, const InteractionStep&) = default;
};

struct RewardRange {
  double min = 0.0;
  double max = 1.0;

  double width() const { return max - min; }
  bool contains(double r) const { return r >= min && r <= max; }
};

struct WeightedPercept {
  Percept percept;
  double probability = 0.0;
};

// A read-only prefix h_<t of an interaction history.
using HistoryView = std::span<const InteractionStep>;

class History {
 public:
  History() = default;
  explicit History(std::vector<InteractionStep> steps) : steps_(std::move(steps)) {}

  void append(const InteractionStep& step) { steps_.push_back(step); }

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const InteractionStep& operator[](std::size_t i) const { return steps_[i]; }
  const InteractionStep& back() const { return steps_.back(); }

  HistoryView view() const { return steps_; }
  // h_<t, the first t steps.
  HistoryView prefix(std::size_t t) const;

  auto begin() const { return steps_.begin(); }
  auto end() const { return steps_.end(); }

 private:
  std::vector<InteractionStep> steps_;
};

}  // namespace mentee
