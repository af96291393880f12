#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mentee/exploration/information_gain.hpp"

namespace mentee {

// Last m_max evaluations of V^IG_{m,0}, one push per timestep, so that
// value(m, k) = V^IG_{m,0}(h_<t-k) = V^IG_{m,k}(h_<t).
class IGCache {
 public:
  explicit IGCache(std::size_t m_max);

  // values[m - 1] for m = 1..m_max, evaluated on the newest prefix.
  void push(const std::vector<double>& values);
  double value(std::size_t m, std::size_t k) const;
  // Number of pushes so far.
  std::size_t size() const { return pushes_; }
  std::size_t m_max() const { return m_max_; }

 private:
  std::size_t m_max_;
  std::vector<std::vector<double>> ring_;
  std::size_t pushes_ = 0;
};

struct ExplorationProbability {
  double beta = 0.0;
  // Upper bound on the omitted terms m > m_max.
  double tail_bound = 0.0;
};

using IGLookup = std::function<double(std::size_t m, std::size_t k)>;

// One summand: (1 / (m^2 (m + 1))) min{1, (eta / m) V^IG_{m,k}}.
double exploration_term(double v_ig, std::size_t m, double eta);

// sum_{m=1}^{m_max} sum_{k=0}^{min(m-1, t)} exploration_term(V(m, k), m, eta).
ExplorationProbability exploration_probability(const IGLookup& v, std::size_t t, std::size_t m_max, double eta);
ExplorationProbability exploration_probability(const IGCache& cache, std::size_t t, const ExplorationParams& params);

}  // namespace mentee
