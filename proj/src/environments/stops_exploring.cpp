#include "mentee/environments/stops_exploring.hpp"

#include <stdexcept>

namespace mentee {

std::vector<Percept> StopsExploringEnv::percept_space() const {
  return {{0, 0.0}, {0, 0.5}, {0, 1.0}};
}

double StopsExploringEnv::reward(std::size_t t, Action action) const {
  if (action > 1) throw std::invalid_argument("StopsExploringEnv: action must be 0 or 1");
  if (action == 0) return 0.5;
  return threshold_ && t >= *threshold_ ? 1.0 : 0.0;
}

double StopsExploringEnv::probability(HistoryView history, Action action,
                                      const Percept& percept) const {
  if (percept.observation != 0) return 0.0;
  return percept.reward == reward(history.size(), action) ? 1.0 : 0.0;
}

}  // namespace mentee
