#pragma once

#include <cstddef>
#include <vector>

namespace mentee {

// The two-action example with models nu_i (action 1 pays once t >= i) and
// nu_infinity, prior w(nu_inf) = 1/2, w(nu_i) = 1 / (2 (i+1) (i+2)).
//
// pi_S explores (action 1) at the times in S and exploits otherwise, switching
// to action 1 for good once it has been paid. The history h_<n is the one pi_S
// produces when every exploration before n went unrewarded.

// w(nu_inf | h_<n).
double stops_exploring_posterior_infinity(const std::vector<std::size_t>& explore_times, std::size_t n);

// sum_i w(nu_i | h_<n) V^{pi_S}_{nu_i}(h_<n), normalised by (1 - gamma).
// The sum over i is evaluated in closed form, tail included.
double stops_exploring_value(const std::vector<std::size_t>& explore_times, std::size_t n, double gamma = 0.9);

// Upper bound w V_inf + (1 - w) on the value of adding one more exploration at n.
double stops_exploring_extra_bound(const std::vector<std::size_t>& explore_times, std::size_t n, double gamma = 0.9);

}  // namespace mentee
