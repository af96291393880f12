#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mentee/core/model.hpp"

namespace mentee {

enum class Cell : std::uint8_t { Empty = 0, Wall = 1, Dispenser = 2, Trap = 3 };
inline constexpr std::size_t kCellKinds = 4;

// Action indices double as direction indices and observation bit positions.
enum Move : Action { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };
inline constexpr std::size_t kMoves = 4;

struct GridGeometry {
  std::size_t width = 0;
  std::size_t height = 0;

  std::size_t cells() const { return width * height; }
  std::size_t index(std::size_t x, std::size_t y) const { return y * width + x; }
  std::size_t x_of(std::size_t cell) const { return cell % width; }
  std::size_t y_of(std::size_t cell) const { return cell / width; }
  // Neighbouring cell in the given direction; empty off the grid.
  std::optional<std::size_t> neighbor(std::size_t cell, Action move) const;
  std::size_t manhattan(std::size_t a, std::size_t b) const;
};

// Mechanics the agents know; only cell contents are hidden from them.
struct GridRewards {
  double dispenser_prob = 0.75;
  double dispenser_reward = 1.0;
  double trap_reward = -30.0;
  double step_reward = 0.0;
};

struct GridLayout {
  GridGeometry geometry;
  std::vector<Cell> cells;
  std::size_t start = 0;
  GridRewards rewards;

  Cell at(std::size_t cell) const { return cells[cell]; }
  // Bit d set when the neighbour in direction d is a wall or off the grid.
  Observation wall_mask(std::size_t cell) const;
  // Cell occupied after attempting `move` from `cell`.
  std::size_t destination(std::size_t cell, Action move) const;
};

struct GridSampleParams {
  std::size_t width = 10;
  std::size_t height = 10;
  double p_trap = 0.2;
  double p_dispenser = 0.2;
  std::size_t min_dispenser_distance = 5;
  std::size_t max_attempts = 1000;
};

// Start at (0, 0), kept empty. Each other cell is a trap with p_trap, else a
// dispenser with p_dispenser when at least min_dispenser_distance moves from
// the start, else empty. Layouts where no dispenser can be reached without
// crossing a trap are redrawn (only when p_dispenser > 0).
GridLayout gridworld_sample(std::uint64_t seed, const GridSampleParams& params = {});

// Live simulator: percept rewards depend on the cell occupied after the move,
// so bumping a wall while standing on a dispenser still pays out.
class Gridworld {
 public:
  explicit Gridworld(GridLayout layout);

  Percept step(Action action, Rng& rng);
  // Applies the movement of `action` without drawing a reward.
  void move(Action action);
  std::vector<WeightedPercept> percept_distribution(Action action) const;
  double probability(Action action, const Percept& percept) const;

  std::size_t position() const { return position_; }
  bool trapped() const { return trapped_; }
  Observation observation() const { return layout_.wall_mask(position_); }
  std::size_t destination(Action action) const;
  const GridLayout& layout() const { return layout_; }

 private:
  GridLayout layout_;
  std::size_t position_;
  bool trapped_ = false;
};

// The same world as a history-indexed Environment (replays the history's
// actions); used where an exact nu(o r | h a) on arbitrary prefixes is needed.
class GridworldEnvironment final : public Environment {
 public:
  explicit GridworldEnvironment(GridLayout layout) : layout_(std::move(layout)) {}

  std::size_t num_actions() const override { return kMoves; }
  std::vector<Percept> percept_space() const override;
  RewardRange reward_range() const override;
  double probability(HistoryView history, Action action, const Percept& percept) const override;
  Percept sample(HistoryView history, Action action, Rng& rng) const override;

  Gridworld replay(HistoryView history) const;
  const GridLayout& layout() const { return layout_; }

 private:
  GridLayout layout_;
};

char cell_symbol(Cell c);

}  // namespace mentee
