#include "mentee/bayes/grid_belief.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace mentee {

namespace {

constexpr std::size_t kE = static_cast<std::size_t>(Cell::Empty);
constexpr std::size_t kW = static_cast<std::size_t>(Cell::Wall);
constexpr std::size_t kD = static_cast<std::size_t>(Cell::Dispenser);
constexpr std::size_t kT = static_cast<std::size_t>(Cell::Trap);

CellPosterior one_hot(std::size_t k) {
  CellPosterior p{};
  p[k] = 1.0;
  return p;
}

bool normalise(CellPosterior& p) {
  double total = 0.0;
  for (double x : p) total += x;
  if (!(total > 0.0)) return false;
  for (double& x : p) x /= total;
  return true;
}

void add_reward(std::vector<std::pair<double, double>>& dist, double reward, double p) {
  if (p <= 0.0) return;
  for (auto& [r, q] : dist) {
    if (r == reward) {
      q += p;
      return;
    }
  }
  dist.emplace_back(reward, p);
}

}  // namespace

GridBelief::GridBelief(GridGeometry geometry, GridRewards rewards, std::size_t start,
                       Observation initial_mask)
    : geometry_(geometry),
      rewards_(rewards),
      cells_(geometry.cells(), CellPosterior{0.25, 0.25, 0.25, 0.25}),
      position_(start) {
  if (geometry_.cells() == 0 || start >= geometry_.cells()) {
    throw std::invalid_argument("GridBelief: start cell outside the grid");
  }
  cells_.set(start, one_hot(kE));
  observe_mask(start, initial_mask);
  mask_ = initial_mask;
}

std::unique_ptr<EnvironmentBelief> GridBelief::clone() const {
  return std::make_unique<GridBelief>(*this);
}

RewardRange GridBelief::reward_range() const {
  return {std::min({rewards_.step_reward, rewards_.dispenser_reward, rewards_.trap_reward}),
          std::max({rewards_.step_reward, rewards_.dispenser_reward, rewards_.trap_reward})};
}

std::size_t GridBelief::destination(Action action) const {
  if (trapped_) return position_;
  if (action >= kMoves) throw std::invalid_argument("GridBelief: action must be in 0..3");
  if ((mask_ >> action) & 1u) return position_;
  return *geometry_.neighbor(position_, action);
}

double GridBelief::reward_likelihood(Cell kind, double reward) const {
  switch (kind) {
    case Cell::Empty:
      return reward == rewards_.step_reward ? 1.0 : 0.0;
    case Cell::Dispenser:
      return (reward == rewards_.dispenser_reward ? rewards_.dispenser_prob : 0.0) +
             (reward == rewards_.step_reward ? 1.0 - rewards_.dispenser_prob : 0.0);
    case Cell::Trap:
      return reward == rewards_.trap_reward ? 1.0 : 0.0;
    case Cell::Wall:
      return 0.0;
  }
  return 0.0;
}

void GridBelief::observe_mask(std::size_t cell, Observation mask) {
  std::vector<std::pair<std::size_t, CellPosterior>> changes;
  for (Action d = 0; d < kMoves; ++d) {
    const bool wall = (mask >> d) & 1u;
    auto n = geometry_.neighbor(cell, d);
    if (!n) {
      if (!wall) throw EvidenceError();
      continue;
    }
    CellPosterior p = cells_[*n];
    if (wall) {
      if (p[kW] <= 0.0) throw EvidenceError();
      if (p[kW] == 1.0) continue;
      p = one_hot(kW);
    } else {
      if (p[kW] == 0.0) continue;
      p[kW] = 0.0;
      if (!normalise(p)) throw EvidenceError();
    }
    changes.emplace_back(*n, p);
  }
  for (const auto& [i, p] : changes) cells_.set(i, p);
}

void GridBelief::update(const InteractionStep& step) {
  const Percept& percept = step.percept;
  if (trapped_) {
    if (percept.reward != rewards_.trap_reward || percept.observation != mask_) throw EvidenceError();
    ++timestep_;
    return;
  }
  const std::size_t dest = destination(step.action);
  CellPosterior p = cells_[dest];
  for (std::size_t k = 0; k < kCellKinds; ++k) p[k] *= reward_likelihood(static_cast<Cell>(k), percept.reward);
  if (!normalise(p)) throw EvidenceError();
  if (dest == position_) {
    if (percept.observation != mask_) throw EvidenceError();
    cells_.set(dest, p);
    ++timestep_;
    return;
  }
  // Validate the mask against a scratch copy so a rejected step leaves no trace.
  GridBelief next = *this;
  next.cells_.set(dest, p);
  next.observe_mask(dest, percept.observation);
  next.position_ = dest;
  next.mask_ = percept.observation;
  next.trapped_ = p[kT] == 1.0;
  ++next.timestep_;
  *this = std::move(next);
}

std::vector<WeightedPercept> GridBelief::predictive(Action action) const {
  if (trapped_) return {{{mask_, rewards_.trap_reward}, 1.0}};
  const std::size_t dest = destination(action);
  const CellPosterior& c = cells_[dest];
  std::vector<std::pair<double, double>> rewards;
  add_reward(rewards, rewards_.step_reward, c[kE] + c[kD] * (1.0 - rewards_.dispenser_prob));
  add_reward(rewards, rewards_.dispenser_reward, c[kD] * rewards_.dispenser_prob);
  add_reward(rewards, rewards_.trap_reward, c[kT]);

  std::vector<std::pair<Observation, double>> masks;
  if (dest == position_) {
    masks.emplace_back(mask_, 1.0);
  } else {
    masks.emplace_back(0u, 1.0);
    for (Action d = 0; d < kMoves; ++d) {
      auto n = geometry_.neighbor(dest, d);
      const double p_wall = n ? cells_[*n][kW] : 1.0;
      std::vector<std::pair<Observation, double>> next;
      for (const auto& [m, q] : masks) {
        if (p_wall > 0.0) next.emplace_back(m | (1u << d), q * p_wall);
        if (p_wall < 1.0) next.emplace_back(m, q * (1.0 - p_wall));
      }
      masks = std::move(next);
    }
  }
  std::vector<WeightedPercept> out;
  out.reserve(masks.size() * rewards.size());
  for (const auto& [m, qm] : masks) {
    for (const auto& [r, qr] : rewards) out.push_back({{m, r}, qm * qr});
  }
  return out;
}

double GridBelief::information_gain_since(const EnvironmentBelief& before) const {
  const auto* b = dynamic_cast<const GridBelief*>(&before);
  if (!b || b->cells_.size() != cells_.size()) {
    throw std::invalid_argument("information_gain_since: beliefs over different grids");
  }
  double kl = 0.0;
  CowTable<CellPosterior>::for_each_candidate(cells_, b->cells_, [&](std::size_t i) {
    kl += kl_divergence(cells_[i], b->cells_[i]);
  });
  return kl;
}

std::unique_ptr<EnvironmentBelief> GridBelief::sample_environment(Rng& rng) const {
  auto sampled = std::make_unique<GridBelief>(*this);
  sampled->cells_ = CowTable<CellPosterior>(cells_.size(), CellPosterior{});
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const std::size_t k = rng.categorical(cells_[i]);
    sampled->cells_.set(i, one_hot(k));
    h = (h ^ k) * 1099511628211ULL;
  }
  sampled->identity_ = h;
  return sampled;
}

bool GridBelief::degenerate() const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& p = cells_[i];
    if (*std::max_element(p.begin(), p.end()) != 1.0) return false;
  }
  return true;
}

MentorGridPosterior::MentorGridPosterior(std::size_t cells) {
  SubsetWeights uniform;
  uniform.fill(1.0 / kSubsets);
  cells_ = CowTable<SubsetWeights>(cells, uniform);
}

std::unique_ptr<PolicyBelief> MentorGridPosterior::clone() const {
  return std::make_unique<MentorGridPosterior>(*this);
}

std::vector<double> MentorGridPosterior::predictive(std::size_t context) const {
  const SubsetWeights& w = cells_[context];
  std::vector<double> p(kMoves, 0.0);
  for (unsigned mask = 1; mask <= kSubsets; ++mask) {
    const double share = w[mask - 1] / std::popcount(mask);
    for (Action a = 0; a < kMoves; ++a) {
      if ((mask >> a) & 1u) p[a] += share;
    }
  }
  return p;
}

void MentorGridPosterior::update(std::size_t context, Action action) {
  if (action >= kMoves) throw std::invalid_argument("MentorGridPosterior: action must be in 0..3");
  SubsetWeights w = cells_[context];
  double total = 0.0;
  for (unsigned mask = 1; mask <= kSubsets; ++mask) {
    double& x = w[mask - 1];
    x = ((mask >> action) & 1u) ? x / std::popcount(mask) : 0.0;
    total += x;
  }
  if (!(total > 0.0)) throw EvidenceError();
  for (double& x : w) x /= total;
  cells_.set(context, w);
}

double MentorGridPosterior::information_gain_since(const PolicyBelief& before) const {
  const auto* b = dynamic_cast<const MentorGridPosterior*>(&before);
  if (!b || b->cells_.size() != cells_.size()) {
    throw std::invalid_argument("information_gain_since: beliefs over different grids");
  }
  double kl = 0.0;
  CowTable<SubsetWeights>::for_each_candidate(cells_, b->cells_, [&](std::size_t i) {
    kl += kl_divergence(cells_[i], b->cells_[i]);
  });
  return kl;
}

bool MentorGridPosterior::degenerate() const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& w = cells_[i];
    if (*std::max_element(w.begin(), w.end()) != 1.0) return false;
  }
  return true;
}

}  // namespace mentee
