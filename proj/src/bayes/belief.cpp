#include "mentee/bayes/belief.hpp"

namespace mentee {

double EnvironmentBelief::probability(Action action, const Percept& percept) const {
  double p = 0.0;
  for (const auto& wp : predictive(action)) {
    if (wp.percept == percept) p += wp.probability;
  }
  return p;
}

Percept EnvironmentBelief::sample_percept(Action action, Rng& rng) const {
  const auto dist = predictive(action);
  std::vector<double> w;
  w.reserve(dist.size());
  for (const auto& wp : dist) w.push_back(wp.probability);
  return dist[rng.categorical(w)].percept;
}

JointBelief::JointBelief(std::unique_ptr<EnvironmentBelief> env, std::unique_ptr<PolicyBelief> mentor)
    : env_(std::move(env)), mentor_(std::move(mentor)) {
  if (!env_) throw std::invalid_argument("JointBelief: environment belief is required");
}

JointBelief::JointBelief(const JointBelief& other)
    : env_(other.env_->clone()), mentor_(other.mentor_ ? other.mentor_->clone() : nullptr) {}

JointBelief& JointBelief::operator=(const JointBelief& other) {
  if (this != &other) {
    env_ = other.env_->clone();
    mentor_ = other.mentor_ ? other.mentor_->clone() : nullptr;
  }
  return *this;
}

void JointBelief::update(const InteractionStep& step) {
  if (mentor_) {
    // The mentor acted in the situation before this step's move.
    if (step.explored) mentor_->update(env_->context(), step.action);
    mentor_->advance(step);
  }
  env_->update(step);
}

double JointBelief::information_gain_since(const JointBelief& before) const {
  double ig = env_->information_gain_since(*before.env_);
  if (mentor_ && before.mentor_) ig += mentor_->information_gain_since(*before.mentor_);
  return ig;
}

bool JointBelief::degenerate() const {
  return env_->degenerate() && (!mentor_ || mentor_->degenerate());
}

}  // namespace mentee
