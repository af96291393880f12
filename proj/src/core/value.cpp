#include "mentee/core/value.hpp"

#include <cmath>
#include <stdexcept>

namespace mentee {

MonteCarloEstimate value_estimate_mc(const Policy& policy, const Environment& environment,
                                     const History& history, const DiscountSchedule& schedule,
                                     std::size_t horizon_steps, std::size_t n_rollouts,
                                     std::uint64_t seed) {
  if (n_rollouts == 0) {
    throw std::invalid_argument("value_estimate_mc needs at least one rollout");
  }
  Rng rng(seed);
  const std::size_t t = history.size();
  const double normaliser = schedule.tail(t);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t n = 0; n < n_rollouts; ++n) {
    History rollout = history;
    double acc = 0.0;
    for (std::size_t k = 0; k < horizon_steps; ++k) {
      const Action a = policy.sample(rollout.view(), rng);
      const Percept p = environment.sample(rollout.view(), a, rng);
      acc += schedule.gamma(t + k) * p.reward;
      rollout.append({false, a, p});
    }
    const double v = acc / normaliser;
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(n_rollouts);
  const double mean = sum / n;
  const double var = n > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1)) : 0.0;
  return {mean, std::sqrt(var / n)};
}

}  // namespace mentee
