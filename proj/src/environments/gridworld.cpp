#include "mentee/environments/gridworld.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>

namespace mentee {

std::optional<std::size_t> GridGeometry::neighbor(std::size_t cell, Action move) const {
  const std::size_t x = x_of(cell);
  const std::size_t y = y_of(cell);
  switch (move) {
    case kUp:
      if (y == 0) return std::nullopt;
      return index(x, y - 1);
    case kDown:
      if (y + 1 >= height) return std::nullopt;
      return index(x, y + 1);
    case kLeft:
      if (x == 0) return std::nullopt;
      return index(x - 1, y);
    case kRight:
      if (x + 1 >= width) return std::nullopt;
      return index(x + 1, y);
    default:
      throw std::invalid_argument("gridworld: action must be in 0..3");
  }
}

std::size_t GridGeometry::manhattan(std::size_t a, std::size_t b) const {
  auto diff = [](std::size_t u, std::size_t v) { return u > v ? u - v : v - u; };
  return diff(x_of(a), x_of(b)) + diff(y_of(a), y_of(b));
}

Observation GridLayout::wall_mask(std::size_t cell) const {
  Observation mask = 0;
  for (Action d = 0; d < kMoves; ++d) {
    auto n = geometry.neighbor(cell, d);
    if (!n || cells[*n] == Cell::Wall) mask |= 1u << d;
  }
  return mask;
}

std::size_t GridLayout::destination(std::size_t cell, Action move) const {
  auto n = geometry.neighbor(cell, move);
  if (!n || cells[*n] == Cell::Wall) return cell;
  return *n;
}

namespace {

bool dispenser_reachable(const GridLayout& layout) {
  std::vector<char> seen(layout.cells.size(), 0);
  std::queue<std::size_t> frontier;
  frontier.push(layout.start);
  seen[layout.start] = 1;
  while (!frontier.empty()) {
    const std::size_t c = frontier.front();
    frontier.pop();
    if (layout.cells[c] == Cell::Dispenser) return true;
    for (Action d = 0; d < kMoves; ++d) {
      const std::size_t n = layout.destination(c, d);
      if (seen[n] || layout.cells[n] == Cell::Trap) continue;
      seen[n] = 1;
      frontier.push(n);
    }
  }
  return false;
}

}  // namespace

GridLayout gridworld_sample(std::uint64_t seed, const GridSampleParams& params) {
  if (params.width == 0 || params.height == 0) {
    throw std::invalid_argument("gridworld_sample: width and height must be positive");
  }
  if (params.p_trap < 0.0 || params.p_trap > 1.0 || params.p_dispenser < 0.0 ||
      params.p_dispenser > 1.0) {
    throw std::invalid_argument("gridworld_sample: probabilities must lie in [0, 1]");
  }
  Rng rng(seed);
  GridLayout layout;
  layout.geometry = {params.width, params.height};
  layout.start = 0;
  layout.cells.assign(layout.geometry.cells(), Cell::Empty);
  for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
    for (std::size_t c = 0; c < layout.cells.size(); ++c) {
      // Two draws per cell whatever the outcome, so layouts depend only on the seed.
      const double u = rng.uniform();
      const double v = rng.uniform();
      Cell cell = Cell::Empty;
      if (c != layout.start) {
        if (u < params.p_trap) {
          cell = Cell::Trap;
        } else if (layout.geometry.manhattan(c, layout.start) >= params.min_dispenser_distance &&
                   v < params.p_dispenser) {
          cell = Cell::Dispenser;
        }
      }
      layout.cells[c] = cell;
    }
    if (params.p_dispenser <= 0.0 || dispenser_reachable(layout)) return layout;
  }
  throw std::runtime_error("degenerate layout parameters");
}

char cell_symbol(Cell c) {
  switch (c) {
    case Cell::Empty: return 'E';
    case Cell::Wall: return 'W';
    case Cell::Dispenser: return 'D';
    case Cell::Trap: return 'T';
  }
  return '?';
}

Gridworld::Gridworld(GridLayout layout) : layout_(std::move(layout)), position_(layout_.start) {
  if (layout_.cells.size() != layout_.geometry.cells() || layout_.cells.empty()) {
    throw std::invalid_argument("Gridworld: cell count does not match geometry");
  }
  if (layout_.cells[layout_.start] != Cell::Empty) {
    throw std::invalid_argument("Gridworld: start cell must be empty");
  }
}

std::size_t Gridworld::destination(Action action) const {
  if (trapped_) return position_;
  return layout_.destination(position_, action);
}

std::vector<WeightedPercept> Gridworld::percept_distribution(Action action) const {
  const GridRewards& r = layout_.rewards;
  const std::size_t dest = destination(action);
  const Observation obs = layout_.wall_mask(dest);
  if (trapped_ || layout_.cells[dest] == Cell::Trap) return {{{obs, r.trap_reward}, 1.0}};
  if (layout_.cells[dest] == Cell::Dispenser) {
    std::vector<WeightedPercept> out;
    if (r.dispenser_prob > 0.0) out.push_back({{obs, r.dispenser_reward}, r.dispenser_prob});
    if (r.dispenser_prob < 1.0) out.push_back({{obs, r.step_reward}, 1.0 - r.dispenser_prob});
    return out;
  }
  return {{{obs, r.step_reward}, 1.0}};
}

double Gridworld::probability(Action action, const Percept& percept) const {
  double p = 0.0;
  for (const auto& wp : percept_distribution(action)) {
    if (wp.percept == percept) p += wp.probability;
  }
  return p;
}

Percept Gridworld::step(Action action, Rng& rng) {
  if (action >= kMoves) throw std::invalid_argument("gridworld: action must be in 0..3");
  const GridRewards& r = layout_.rewards;
  move(action);
  if (trapped_) return {observation(), r.trap_reward};
  double reward = r.step_reward;
  if (layout_.cells[position_] == Cell::Dispenser && rng.bernoulli(r.dispenser_prob)) {
    reward = r.dispenser_reward;
  }
  return {observation(), reward};
}

void Gridworld::move(Action action) {
  if (action >= kMoves) throw std::invalid_argument("gridworld: action must be in 0..3");
  if (trapped_) return;
  position_ = layout_.destination(position_, action);
  if (layout_.cells[position_] == Cell::Trap) trapped_ = true;
}

std::vector<Percept> GridworldEnvironment::percept_space() const {
  const GridRewards& r = layout_.rewards;
  std::vector<double> rewards{r.step_reward, r.dispenser_reward, r.trap_reward};
  std::sort(rewards.begin(), rewards.end());
  rewards.erase(std::unique(rewards.begin(), rewards.end()), rewards.end());
  std::vector<Percept> out;
  for (Observation o = 0; o < 16; ++o) {
    for (double rw : rewards) out.push_back({o, rw});
  }
  return out;
}

RewardRange GridworldEnvironment::reward_range() const {
  const GridRewards& r = layout_.rewards;
  return {std::min({r.step_reward, r.dispenser_reward, r.trap_reward}),
          std::max({r.step_reward, r.dispenser_reward, r.trap_reward})};
}

Gridworld GridworldEnvironment::replay(HistoryView history) const {
  // Movement is deterministic, so actions alone fix the position and the latch.
  Gridworld world(layout_);
  for (const auto& step : history) world.move(step.action);
  return world;
}

double GridworldEnvironment::probability(HistoryView history, Action action,
                                         const Percept& percept) const {
  return replay(history).probability(action, percept);
}

Percept GridworldEnvironment::sample(HistoryView history, Action action, Rng& rng) const {
  return replay(history).step(action, rng);
}

}  // namespace mentee
