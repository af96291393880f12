#pragma once

// Random small planning problems plus a from-scratch expectimax used as the
// reference for the planner tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <vector>

#include "mentee/core/rng.hpp"
#include "toy_models.hpp"

namespace toy {

// Percepts (o, r) with o, r in {0, 1}; the distribution depends on the
// timestep, the previous observation and the action.
inline std::shared_ptr<const mentee::Environment> random_table_env(mentee::Rng& rng, std::size_t actions,
                                                                    std::size_t depth) {
  const std::vector<Percept> space{{0, 0.0}, {0, 1.0}, {1, 0.0}, {1, 1.0}};
  std::vector<std::array<double, 4>> table(depth * 2 * actions);
  for (auto& row : table) {
    double s = 0.0;
    for (double& x : row) {
      // Sparse rows keep the trees small and the values well separated.
      x = rng.bernoulli(0.4) ? 0.0 : rng.uniform();
      s += x;
    }
    if (s == 0.0) {
      row[rng.below(4)] = 1.0;
      s = 1.0;
    }
    for (double& x : row) x /= s;
  }
  return std::make_shared<FunctionEnvironment>(
      actions, space, mentee::RewardRange{0.0, 1.0}, [table, space, actions, depth](HistoryView h, Action a) {
        const std::size_t t = std::min(h.size(), depth - 1);
        const std::size_t prev = h.empty() ? 0 : h.back().percept.observation;
        const auto& row = table[(t * 2 + prev) * actions + a];
        std::vector<WeightedPercept> out;
        for (std::size_t i = 0; i < 4; ++i) {
          if (row[i] > 0.0) out.push_back({space[i], row[i]});
        }
        return out;
      });
}

struct ToyProblem {
  std::vector<std::shared_ptr<const mentee::Environment>> models;
  std::vector<double> prior;
  std::size_t actions = 2;
  std::size_t depth = 2;
};

inline ToyProblem random_problem(mentee::Rng& rng, std::size_t depth, std::size_t n_models = 2) {
  ToyProblem p;
  p.depth = depth;
  for (std::size_t i = 0; i < n_models; ++i) {
    p.models.push_back(random_table_env(rng, p.actions, depth));
    p.prior.push_back(0.1 + rng.uniform());
  }
  double s = 0.0;
  for (double w : p.prior) s += w;
  for (double& w : p.prior) w /= s;
  return p;
}

// Undiscounted expectimax values of every root action, recomputing the
// posterior from scratch along each branch.
class BruteForcePlanner {
 public:
  explicit BruteForcePlanner(const ToyProblem& p) : p_(p) {}

  std::vector<double> action_values(std::vector<mentee::InteractionStep>& h, std::size_t depth) const {
    std::vector<double> out;
    for (Action a = 0; a < p_.actions; ++a) out.push_back(q(h, a, depth));
    return out;
  }

  double value(std::vector<mentee::InteractionStep>& h, std::size_t depth) const {
    if (depth == 0) return 0.0;
    auto qs = action_values(h, depth);
    return *std::max_element(qs.begin(), qs.end());
  }

 private:
  double q(std::vector<mentee::InteractionStep>& h, Action a, std::size_t depth) const {
    std::vector<double> w(p_.models.size());
    double z = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = p_.prior[i];
      for (std::size_t k = 0; k < h.size(); ++k) {
        w[i] *= p_.models[i]->probability(HistoryView(h).subspan(0, k), h[k].action, h[k].percept);
      }
      z += w[i];
    }
    double total = 0.0;
    for (const Percept& e : p_.models.front()->percept_space()) {
      double xi = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) xi += w[i] / z * p_.models[i]->probability(h, a, e);
      if (xi <= 0.0) continue;
      h.push_back({false, a, e});
      total += xi * (e.reward + value(h, depth - 1));
      h.pop_back();
    }
    return total;
  }

  const ToyProblem& p_;
};

// Gap between the best and second-best root action.
inline double value_gap(std::vector<double> qs) {
  std::sort(qs.begin(), qs.end(), std::greater<>());
  return qs.size() < 2 ? INFINITY : qs[0] - qs[1];
}

}  // namespace toy
