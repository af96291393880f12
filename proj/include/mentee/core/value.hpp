#pragma once

#include <cstddef>
#include <cstdint>

#include "mentee/core/discount.hpp"
#include "mentee/core/model.hpp"

namespace mentee {

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

// Truncated Monte-Carlo estimate of V^pi_nu(h_<t): each rollout follows the
// policy for horizon_steps and the discounted sum is normalised by Gamma_t.
MonteCarloEstimate value_estimate_mc(const Policy& policy, const Environment& environment,
                                     const History& history, const DiscountSchedule& schedule,
                                     std::size_t horizon_steps, std::size_t n_rollouts,
                                     std::uint64_t seed);

}  // namespace mentee
