#include "mentee/environments/bandit.hpp"

#include <stdexcept>

namespace mentee {

double bandit_prob(Action action, double reward) {
  if (action > 1 || (reward != 0.0 && reward != 1.0)) {
    throw std::invalid_argument("bandit_prob: action and reward must be 0 or 1");
  }
  return reward == static_cast<double>(action) ? 2.0 / 3.0 : 1.0 / 3.0;
}

double TwoArmedBandit::probability(HistoryView, Action action, const Percept& percept) const {
  if (percept.observation != 0) return 0.0;
  if (percept.reward != 0.0 && percept.reward != 1.0) return 0.0;
  return bandit_prob(action, percept.reward);
}

}  // namespace mentee
