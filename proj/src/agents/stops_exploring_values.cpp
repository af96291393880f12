#include "mentee/agents/stops_exploring_values.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mentee {
namespace {

// sum_{i=a}^{b} 1 / (2 (i+1) (i+2)) by telescoping.
double prior_mass(std::size_t a, std::size_t b) {
  return 0.5 * (1.0 / (static_cast<double>(a) + 1.0) - 1.0 / (static_cast<double>(b) + 2.0));
}

// Mass of every nu_i with i >= a, plus nu_inf.
double mass_from(std::size_t a) { return 0.5 + 0.5 / (static_cast<double>(a) + 1.0); }

struct Split {
  std::size_t first_alive = 0;  // smallest i not ruled out by h_<n
  std::vector<std::size_t> future;
};

Split split(std::vector<std::size_t> times, std::size_t n) {
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  Split out;
  for (std::size_t s : times) {
    if (s < n) out.first_alive = s + 1;
    else out.future.push_back(s);
  }
  return out;
}

// Normalised value from n when action 1 first pays at tau (never if tau is
// empty); unrewarded explorations before tau pay 0, exploitation pays 1/2.
double value_paid_at(const std::vector<std::size_t>& future, std::size_t n, const std::size_t* tau, double gamma) {
  double missed = 0.0;
  for (std::size_t f : future) {
    if (tau && f >= *tau) break;
    missed += std::pow(gamma, static_cast<double>(f - n));
  }
  const double paid = tau ? std::pow(gamma, static_cast<double>(*tau - n)) : 0.0;
  return 0.5 * (1.0 - paid) - 0.5 * (1.0 - gamma) * missed + paid;
}

}  // namespace

double stops_exploring_posterior_infinity(const std::vector<std::size_t>& explore_times, std::size_t n) {
  return 0.5 / mass_from(split(explore_times, n).first_alive);
}

double stops_exploring_value(const std::vector<std::size_t>& explore_times, std::size_t n, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0, 1)");
  const Split s = split(explore_times, n);
  double total = 0.0;
  std::size_t lo = s.first_alive;
  for (std::size_t f : s.future) {
    // nu_i with lo <= i <= f are first paid at f.
    if (f >= lo) {
      total += prior_mass(lo, f) * value_paid_at(s.future, n, &f, gamma);
      lo = f + 1;
    }
  }
  total += mass_from(lo) * value_paid_at(s.future, n, nullptr, gamma);
  return total / mass_from(s.first_alive);
}

double stops_exploring_extra_bound(const std::vector<std::size_t>& explore_times, std::size_t n, double gamma) {
  const double w = stops_exploring_posterior_infinity(explore_times, n);
  std::vector<std::size_t> extended = explore_times;
  extended.push_back(n);
  const Split s = split(extended, n);
  return w * value_paid_at(s.future, n, nullptr, gamma) + (1.0 - w);
}

}  // namespace mentee
