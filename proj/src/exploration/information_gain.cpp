#include "mentee/exploration/information_gain.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mentee/planners/expectimax.hpp"

namespace mentee {

namespace {

void enumerate(const JointBelief& node, const JointBelief& root, double prob, std::size_t depth,
               std::size_t max_depth, std::vector<double>& sums) {
  if (depth > 0) sums[depth - 1] += prob * node.information_gain_since(root);
  if (depth == max_depth) return;
  const auto pi = node.mentor().predictive(node.env().context());
  for (Action a = 0; a < pi.size(); ++a) {
    if (pi[a] <= 0.0) continue;
    for (const auto& wp : node.env().predictive(a)) {
      JointBelief child = node;
      child.update({true, a, wp.percept});
      enumerate(child, root, prob * pi[a] * wp.probability, depth + 1, max_depth, sums);
    }
  }
}

}  // namespace

IGValues expected_ig_values(const JointBelief& belief, std::size_t m_max, const ExplorationParams& params,
                            std::uint64_t seed) {
  if (m_max == 0) throw std::invalid_argument("expected_ig_values: m must be at least 1");
  if (!belief.has_mentor()) throw std::invalid_argument("expected_ig_values: a mentor model is required");
  IGValues out;
  out.values.assign(m_max, 0.0);
  out.standard_errors.assign(m_max, 0.0);
  if (belief.degenerate()) {
    out.exact_depth = m_max;
    return out;
  }
  std::size_t exact = 0;
  while (exact < m_max && search_tree_size(belief.env(), exact + 1) <= params.enumeration_budget) ++exact;
  if (exact > 0) {
    std::vector<double> sums(exact, 0.0);
    enumerate(belief, belief, 1.0, 0, exact, sums);
    for (std::size_t m = 0; m < exact; ++m) out.values[m] = sums[m];
  }
  out.exact_depth = exact;
  if (exact == m_max) return out;
  if (params.ig_samples == 0) throw std::invalid_argument("expected_ig_values: ig_samples must be positive");

  Rng rng(seed);
  std::vector<double> sum(m_max, 0.0), sq(m_max, 0.0);
  for (std::size_t s = 0; s < params.ig_samples; ++s) {
    JointBelief b = belief;
    for (std::size_t j = 0; j < m_max; ++j) {
      const auto pi = b.mentor().predictive(b.env().context());
      const Action a = static_cast<Action>(rng.categorical(pi));
      const Percept p = b.env().sample_percept(a, rng);
      b.update({true, a, p});
      if (j < exact) continue;
      const double ig = b.information_gain_since(belief);
      sum[j] += ig;
      sq[j] += ig * ig;
    }
  }
  const double n = static_cast<double>(params.ig_samples);
  for (std::size_t j = exact; j < m_max; ++j) {
    const double mean = sum[j] / n;
    out.values[j] = mean;
    const double var = n > 1 ? std::max(0.0, (sq[j] - n * mean * mean) / (n - 1)) : 0.0;
    out.standard_errors[j] = std::sqrt(var / n);
  }
  return out;
}

double expected_ig_value(const JointBelief& belief, std::size_t m, const ExplorationParams& params,
                         std::uint64_t seed) {
  return expected_ig_values(belief, m, params, seed).values.at(m - 1);
}

double ig_units(double nats, const ExplorationParams& params) {
  return params.in_bits ? nats / std::numbers::ln2 : nats;
}

}  // namespace mentee
