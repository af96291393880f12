#include "mentee/bayes/finite_belief.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mentee {

namespace {

std::vector<double> normalised(std::vector<double> w, const char* who) {
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(total > 0.0)) throw std::invalid_argument(std::string(who) + ": prior must have positive mass");
  for (double& x : w) {
    if (x < 0.0) throw std::invalid_argument(std::string(who) + ": prior weights must be nonnegative");
    x /= total;
  }
  return w;
}

}  // namespace

FiniteMixtureBelief::FiniteMixtureBelief(std::vector<std::shared_ptr<const Environment>> models,
                                         std::vector<double> prior, std::optional<double> tolerance)
    : models_(std::move(models)), tolerance_(tolerance) {
  if (models_.empty() || prior.size() != models_.size()) {
    throw std::invalid_argument("FiniteMixtureBelief: need one prior weight per model");
  }
  prior_ = normalised(std::move(prior), "FiniteMixtureBelief");
  weights_ = prior_;
  range_ = models_.front()->reward_range();
  for (std::size_t i = 0; i < models_.size(); ++i) {
    if (weights_[i] > 0.0) active_.push_back(i);
    const RewardRange r = models_[i]->reward_range();
    range_.min = std::min(range_.min, r.min);
    range_.max = std::max(range_.max, r.max);
    for (const Percept& p : models_[i]->percept_space()) {
      if (std::find(percepts_.begin(), percepts_.end(), p) == percepts_.end()) percepts_.push_back(p);
    }
  }
}

std::unique_ptr<EnvironmentBelief> FiniteMixtureBelief::clone() const {
  return std::make_unique<FiniteMixtureBelief>(*this);
}

std::size_t FiniteMixtureBelief::num_actions() const { return models_.front()->num_actions(); }

std::vector<WeightedPercept> FiniteMixtureBelief::predictive(Action action) const {
  std::vector<std::pair<std::size_t, double>> w;
  if (tolerance_) {
    const auto t = posterior_within_tolerance(models_, prior_, history_.view(), *tolerance_);
    for (std::size_t i = 0; i < t.count; ++i) {
      if (t.weights[i] > 0.0) w.emplace_back(i, t.weights[i]);
    }
  } else {
    for (std::size_t i : active_) w.emplace_back(i, weights_[i]);
  }
  std::vector<WeightedPercept> out;
  for (const Percept& p : percepts_) {
    double prob = 0.0;
    for (const auto& [i, wi] : w) prob += wi * models_[i]->probability(history_.view(), action, p);
    if (prob > 0.0) out.push_back({p, prob});
  }
  return out;
}

void FiniteMixtureBelief::update(const InteractionStep& step) {
  std::vector<double> next(weights_.size(), 0.0);
  double total = 0.0;
  for (std::size_t i : active_) {
    next[i] = weights_[i] * models_[i]->probability(history_.view(), step.action, step.percept);
    total += next[i];
  }
  if (!(total > 0.0)) throw EvidenceError();
  std::vector<std::size_t> still;
  for (std::size_t i : active_) {
    next[i] /= total;
    if (next[i] > 0.0) still.push_back(i);
  }
  weights_ = std::move(next);
  active_ = std::move(still);
  history_.append(step);
}

double FiniteMixtureBelief::information_gain_since(const EnvironmentBelief& before) const {
  const auto* b = dynamic_cast<const FiniteMixtureBelief*>(&before);
  if (!b || b->models_.size() != models_.size()) {
    throw std::invalid_argument("information_gain_since: beliefs over different model classes");
  }
  return kl_divergence(weights_, b->weights_);
}

std::unique_ptr<EnvironmentBelief> FiniteMixtureBelief::sample_environment(Rng& rng) const {
  const std::size_t i = rng.categorical(weights_);
  std::vector<double> point(models_.size(), 0.0);
  point[i] = 1.0;
  auto sampled = std::make_unique<FiniteMixtureBelief>(models_, point);
  sampled->history_ = history_;
  return sampled;
}

std::uint64_t FiniteMixtureBelief::identity() const {
  return active_.size() == 1 ? active_.front() : std::numeric_limits<std::uint64_t>::max();
}

FinitePolicyMixture::FinitePolicyMixture(std::vector<std::shared_ptr<const Policy>> models,
                                         std::vector<double> prior)
    : models_(std::move(models)) {
  if (models_.empty() || prior.size() != models_.size()) {
    throw std::invalid_argument("FinitePolicyMixture: need one prior weight per model");
  }
  weights_ = normalised(std::move(prior), "FinitePolicyMixture");
}

std::unique_ptr<PolicyBelief> FinitePolicyMixture::clone() const {
  return std::make_unique<FinitePolicyMixture>(*this);
}

std::size_t FinitePolicyMixture::num_actions() const { return models_.front()->num_actions(); }

std::vector<double> FinitePolicyMixture::predictive(std::size_t) const {
  std::vector<double> out(num_actions(), 0.0);
  for (std::size_t i = 0; i < models_.size(); ++i) {
    if (weights_[i] <= 0.0) continue;
    for (Action a = 0; a < out.size(); ++a) out[a] += weights_[i] * models_[i]->probability(history_.view(), a);
  }
  return out;
}

void FinitePolicyMixture::update(std::size_t, Action action) {
  std::vector<double> next(weights_.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < models_.size(); ++i) {
    if (weights_[i] <= 0.0) continue;
    next[i] = weights_[i] * models_[i]->probability(history_.view(), action);
    total += next[i];
  }
  if (!(total > 0.0)) throw EvidenceError();
  for (double& w : next) w /= total;
  weights_ = std::move(next);
}

double FinitePolicyMixture::information_gain_since(const PolicyBelief& before) const {
  const auto* b = dynamic_cast<const FinitePolicyMixture*>(&before);
  if (!b || b->models_.size() != models_.size()) {
    throw std::invalid_argument("information_gain_since: beliefs over different model classes");
  }
  return kl_divergence(weights_, b->weights_);
}

bool FinitePolicyMixture::degenerate() const {
  return std::count_if(weights_.begin(), weights_.end(), [](double w) { return w > 0.0; }) == 1;
}

}  // namespace mentee
