#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "mentee/bayes/belief.hpp"
#include "mentee/bayes/cow_table.hpp"
#include "mentee/environments/gridworld.hpp"

namespace mentee {

using CellPosterior = std::array<double, kCellKinds>;

// Factored posterior over gridworld layouts: each cell holds a categorical
// belief over {empty, wall, dispenser, trap}, starting from the Dirichlet(1)
// prior mean of 1/4 each. Cell contents are fixed, so evidence is absorbed by
// exact Bayes on each cell. Movement is deterministic and the wall bits of the
// current cell's neighbours are always observed, so the agent's position is
// known exactly.
class GridBelief final : public EnvironmentBelief {
 public:
  GridBelief(GridGeometry geometry, GridRewards rewards, std::size_t start, Observation initial_mask);

  std::unique_ptr<EnvironmentBelief> clone() const override;
  std::size_t num_actions() const override { return kMoves; }
  RewardRange reward_range() const override;
  std::size_t max_percepts() const override { return 16 * 3; }
  std::vector<WeightedPercept> predictive(Action action) const override;
  void update(const InteractionStep& step) override;
  double information_gain_since(const EnvironmentBelief& before) const override;
  std::unique_ptr<EnvironmentBelief> sample_environment(Rng& rng) const override;
  bool degenerate() const override;
  std::size_t timestep() const override { return timestep_; }
  std::size_t context() const override { return position_; }
  std::uint64_t identity() const override { return identity_; }

  const CellPosterior& cell(std::size_t i) const { return cells_[i]; }
  double probability_of(std::size_t cell, Cell kind) const {
    return cells_[cell][static_cast<std::size_t>(kind)];
  }
  std::size_t position() const { return position_; }
  Observation mask() const { return mask_; }
  bool trapped() const { return trapped_; }
  const GridGeometry& geometry() const { return geometry_; }
  const GridRewards& rewards() const { return rewards_; }
  // Cell reached by `action`; walls are known around the current cell.
  std::size_t destination(Action action) const;

 private:
  double reward_likelihood(Cell kind, double reward) const;
  void observe_mask(std::size_t cell, Observation mask);

  GridGeometry geometry_;
  GridRewards rewards_;
  CowTable<CellPosterior> cells_;
  std::size_t position_;
  Observation mask_ = 0;
  bool trapped_ = false;
  std::size_t timestep_ = 0;
  std::uint64_t identity_ = 0;
};

// Mentor model class factored over cells: in each cell the mentor picks
// uniformly from a fixed nonempty subset S of the four moves. Subsets are
// encoded as bitmasks 1..15 and stored at index mask - 1.
class MentorGridPosterior final : public PolicyBelief {
 public:
  static constexpr std::size_t kSubsets = 15;
  using SubsetWeights = std::array<double, kSubsets>;

  explicit MentorGridPosterior(std::size_t cells);

  std::unique_ptr<PolicyBelief> clone() const override;
  std::size_t num_actions() const override { return kMoves; }
  std::vector<double> predictive(std::size_t context) const override;
  void update(std::size_t context, Action action) override;
  double information_gain_since(const PolicyBelief& before) const override;
  bool degenerate() const override;

  const SubsetWeights& cell(std::size_t i) const { return cells_[i]; }
  std::size_t num_cells() const { return cells_.size(); }
  static double subset_weight(const SubsetWeights& w, unsigned mask) { return w[mask - 1]; }

 private:
  CowTable<SubsetWeights> cells_;
};

}  // namespace mentee
