#include "mentee/exploration/exploration_probability.hpp"

#include <algorithm>
#include <stdexcept>

namespace mentee {

IGCache::IGCache(std::size_t m_max) : m_max_(m_max), ring_(m_max) {
  if (m_max == 0) throw std::invalid_argument("IGCache: m_max must be positive");
}

void IGCache::push(const std::vector<double>& values) {
  if (values.size() != m_max_) throw std::invalid_argument("IGCache: expected one value per m");
  ring_[pushes_ % m_max_] = values;
  ++pushes_;
}

double IGCache::value(std::size_t m, std::size_t k) const {
  if (m == 0 || m > m_max_) throw std::out_of_range("IGCache: m out of range");
  if (k >= m_max_ || k >= pushes_) throw std::out_of_range("IGCache: no entry that far back");
  return ring_[(pushes_ - 1 - k) % m_max_][m - 1];
}

double exploration_term(double v_ig, std::size_t m, double eta) {
  const double md = static_cast<double>(m);
  return std::min(1.0, eta / md * v_ig) / (md * md * (md + 1.0));
}

ExplorationProbability exploration_probability(const IGLookup& v, std::size_t t, std::size_t m_max, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("exploration_probability: eta must be positive");
  if (m_max == 0) throw std::invalid_argument("exploration_probability: m_max must be positive");
  ExplorationProbability out;
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (std::size_t k = 0; k <= std::min(m - 1, t); ++k) out.beta += exploration_term(v(m, k), m, eta);
  }
  out.tail_bound = 1.0 / static_cast<double>(m_max + 1);
  return out;
}

ExplorationProbability exploration_probability(const IGCache& cache, std::size_t t, const ExplorationParams& params) {
  if (cache.m_max() < params.m_max) throw std::invalid_argument("exploration_probability: cache too shallow");
  if (cache.size() < std::min(params.m_max, t + 1)) {
    throw std::invalid_argument("exploration_probability: cache behind the history");
  }
  return exploration_probability([&](std::size_t m, std::size_t k) { return cache.value(m, k); }, t, params.m_max,
                                 params.eta);
}

}  // namespace mentee
