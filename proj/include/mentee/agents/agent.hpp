#pragma once

#include <string>

#include "mentee/core/types.hpp"

namespace mentee {

// What the agent wants this step. A deferring agent leaves the action choice
// to whoever runs it, who then reports the mentor's action through observe().
struct Decision {
  bool defer = false;
  Action action = 0;
  // Probability with which this step was deferred (0 for agents that never defer).
  double beta = 0.0;
};

class Agent {
 public:
  virtual ~Agent() = default;

  virtual Decision act() = 0;
  // The step that actually happened; step.explored marks a deferred step.
  virtual void observe(const InteractionStep& step) = 0;
  virtual std::string name() const = 0;
};

}  // namespace mentee
