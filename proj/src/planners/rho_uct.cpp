#include "mentee/planners/rho_uct.hpp"

#include <cstdio>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mentee {

namespace {

struct DecisionNode;

struct ChanceNode {
  std::size_t visits = 0;
  double mean = 0.0;
  std::vector<std::pair<Percept, std::unique_ptr<DecisionNode>>> children;

  DecisionNode& child(const Percept& p, std::size_t actions);
};

struct DecisionNode {
  std::size_t visits = 0;
  double mean = 0.0;
  std::vector<ChanceNode> actions;

  explicit DecisionNode(std::size_t n) : actions(n) {}
};

DecisionNode& ChanceNode::child(const Percept& p, std::size_t actions) {
  for (auto& [q, node] : children) {
    if (q == p) return *node;
  }
  children.emplace_back(p, std::make_unique<DecisionNode>(actions));
  return *children.back().second;
}

void record(std::size_t& visits, double& mean, double value) {
  mean = (value + static_cast<double>(visits) * mean) / static_cast<double>(visits + 1);
  ++visits;
}

class Search {
 public:
  Search(const EnvironmentBelief& root, const PlannerConfig& config, std::uint64_t seed)
      : root_(root), config_(config), rng_(seed), range_(root.reward_range()), actions_(root.num_actions()) {}

  double sample(DecisionNode& node, EnvironmentBelief& model, std::size_t m) {
    double value;
    if (m == 0) {
      value = leaf(model);
    } else if (node.visits == 0) {
      value = rollout(model, m);
    } else {
      const Action a = select(node, m);
      value = sample_chance(node.actions[a], a, model, m);
    }
    record(node.visits, node.mean, value);
    return value;
  }

 private:
  bool reward_mode() const { return config_.objective == Objective::Reward; }

  double leaf(const EnvironmentBelief& model) const {
    return reward_mode() ? 0.0 : model.information_gain_since(root_);
  }

  double sample_chance(ChanceNode& chance, Action a, EnvironmentBelief& model, std::size_t m) {
    const Percept p = model.sample_percept(a, rng_);
    model.update({false, a, p});
    double value = reward_mode() ? p.reward : 0.0;
    if (m > 1) {
      value += sample(chance.child(p, actions_), model, m - 1);
    } else {
      value += leaf(model);
    }
    record(chance.visits, chance.mean, value);
    return value;
  }

  Action select(DecisionNode& node, std::size_t m) {
    std::vector<Action> untried;
    for (Action a = 0; a < actions_; ++a) {
      if (node.actions[a].visits == 0) untried.push_back(a);
    }
    if (!untried.empty()) return untried[rng_.below(untried.size())];
    const double md = static_cast<double>(m);
    const double log_t = std::log(static_cast<double>(node.visits));
    Action best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (Action a = 0; a < actions_; ++a) {
      const ChanceNode& c = node.actions[a];
      // Shifting by m * r_min maps returns to [0, 1] without changing the argmax.
      const double normalised = reward_mode() ? (c.mean - md * range_.min) / (md * range_.width())
                                              : c.mean / (md * config_.ig_scale);
      const double score = normalised + config_.ucb_c * std::sqrt(log_t / static_cast<double>(c.visits));
      if (score > best_score) {
        best_score = score;
        best = a;
      }
    }
    return best;
  }

  double rollout(EnvironmentBelief& model, std::size_t m) {
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const Action a = static_cast<Action>(rng_.below(actions_));
      const Percept p = model.sample_percept(a, rng_);
      model.update({false, a, p});
      total += p.reward;
    }
    return reward_mode() ? total : leaf(model);
  }

  const EnvironmentBelief& root_;
  const PlannerConfig& config_;
  Rng rng_;
  RewardRange range_;
  std::size_t actions_;
};

}  // namespace

RhoUctResult rho_uct(const EnvironmentBelief& belief, const PlannerConfig& config, std::uint64_t seed) {
  if (config.samples == 0) throw std::invalid_argument("rho_uct: sample budget must be positive");
  if (config.horizon == 0) throw std::invalid_argument("rho_uct: horizon must be positive");
  if (config.objective == Objective::Reward && !(belief.reward_range().width() > 0.0)) {
    throw std::invalid_argument("rho_uct: reward range must have positive width");
  }
  Search search(belief, config, seed);
  DecisionNode root(belief.num_actions());
  for (std::size_t i = 0; i < config.samples; ++i) {
    auto model = belief.clone();
    search.sample(root, *model, config.horizon);
  }
  RhoUctResult result;
  result.root_visits = root.visits;
  bool have = false;
  for (Action a = 0; a < root.actions.size(); ++a) {
    const ChanceNode& c = root.actions[a];
    result.actions.push_back({c.visits, c.mean});
    if (c.visits == 0) continue;
    if (!have || c.mean > result.value) {
      result.action = a;
      result.value = c.mean;
      have = true;
    }
  }
  return result;
}

void write_tree_stats(std::ostream& out, const RhoUctResult& result) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "root visits=%zu chosen=%u value=%.6f\n", result.root_visits, result.action,
                result.value);
  out << buf;
  for (std::size_t a = 0; a < result.actions.size(); ++a) {
    std::snprintf(buf, sizeof buf, "action=%zu visits=%zu mean=%.6f\n", a, result.actions[a].visits,
                  result.actions[a].mean);
    out << buf;
  }
}

std::string tree_stats_string(const RhoUctResult& result) {
  std::ostringstream out;
  write_tree_stats(out, result);
  return out.str();
}

}  // namespace mentee
