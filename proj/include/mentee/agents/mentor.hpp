#pragma once

#include <cstddef>
#include <vector>

#include "mentee/agents/agent.hpp"
#include "mentee/core/rng.hpp"
#include "mentee/environments/gridworld.hpp"

namespace mentee {

// Knows where the traps are and walks randomly among the moves that do not
// land in one. Bumping into a wall is allowed.
class MentorOracle {
 public:
  explicit MentorOracle(GridLayout layout) : layout_(std::move(layout)) {}

  // Moves allowed from `position`; every move once trapped.
  std::vector<Action> safe_moves(std::size_t position, bool trapped) const;
  Action act(std::size_t position, bool trapped, Rng& rng) const;

 private:
  GridLayout layout_;
};

// Random moves with no knowledge of the layout, for sanity comparisons.
class UniformMentor {
 public:
  Action act(Rng& rng) const { return static_cast<Action>(rng.below(kMoves)); }
};

// Always defers.
class MentorOnlyAgent final : public Agent {
 public:
  Decision act() override { return {true, 0, 1.0}; }
  void observe(const InteractionStep&) override {}
  std::string name() const override { return "mentor-only"; }
};

}  // namespace mentee
