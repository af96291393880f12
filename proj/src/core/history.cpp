#include <stdexcept>

#include "mentee/core/model.hpp"
#include "mentee/core/types.hpp"

namespace mentee {

HistoryView History::prefix(std::size_t t) const {
  if (t > steps_.size()) {
    throw std::out_of_range("history prefix longer than history");
  }
  return HistoryView(steps_.data(), t);
}

Percept Environment::sample(HistoryView history, Action action, Rng& rng) const {
  const auto space = percept_space();
  std::vector<double> weights;
  weights.reserve(space.size());
  for (const auto& p : space) {
    weights.push_back(probability(history, action, p));
  }
  return space[rng.categorical(weights)];
}

Action Policy::sample(HistoryView history, Rng& rng) const {
  std::vector<double> weights(num_actions());
  for (Action a = 0; a < weights.size(); ++a) {
    weights[a] = probability(history, a);
  }
  return static_cast<Action>(rng.categorical(weights));
}

}  // namespace mentee
