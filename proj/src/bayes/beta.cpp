#include "mentee/bayes/beta.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

namespace mentee {

using boost::math::digamma;

double beta_kl(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw std::invalid_argument("beta_kl: parameters must be positive");
  return std::log((alpha + beta) / alpha) + digamma(alpha + 1.0) - digamma(alpha + beta + 1.0);
}

double beta_kl_general(double a1, double b1, double a0, double b0) {
  if (!(a1 > 0.0) || !(b1 > 0.0) || !(a0 > 0.0) || !(b0 > 0.0)) {
    throw std::invalid_argument("beta_kl_general: parameters must be positive");
  }
  using boost::math::lgamma;
  const double log_b0 = lgamma(a0) + lgamma(b0) - lgamma(a0 + b0);
  const double log_b1 = lgamma(a1) + lgamma(b1) - lgamma(a1 + b1);
  return log_b0 - log_b1 + (a1 - a0) * digamma(a1) + (b1 - b0) * digamma(b1) +
         (a0 - a1 + b0 - b1) * digamma(a1 + b1);
}

double beta_bandit_expected_ig(double n_plus, double n_minus) {
  if (n_plus < 0.0 || n_minus < 0.0) throw std::invalid_argument("beta_bandit_expected_ig: counts must be nonnegative");
  const double n = n_plus + n_minus;
  double value = std::log(n + 2.0) - digamma(n + 3.0);
  for (double c : {n_plus, n_minus}) value += (c + 1.0) / (n + 2.0) * (digamma(c + 2.0) - std::log(c + 1.0));
  return value;
}

BetaBanditBelief::BetaBanditBelief(std::size_t arms) : successes_(arms, 0.0), failures_(arms, 0.0) {
  if (arms == 0) throw std::invalid_argument("BetaBanditBelief: need at least one arm");
}

BetaBanditBelief::BetaBanditBelief(std::vector<double> fixed_bias)
    : successes_(fixed_bias.size(), 0.0), failures_(fixed_bias.size(), 0.0), bias_(std::move(fixed_bias)) {
  if (bias_->empty()) throw std::invalid_argument("BetaBanditBelief: need at least one arm");
  for (double p : *bias_) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("BetaBanditBelief: bias must lie in [0, 1]");
  }
}

std::unique_ptr<EnvironmentBelief> BetaBanditBelief::clone() const {
  return std::make_unique<BetaBanditBelief>(*this);
}

std::vector<WeightedPercept> BetaBanditBelief::predictive(Action action) const {
  if (action >= successes_.size()) throw std::invalid_argument("BetaBanditBelief: action out of range");
  const double p1 = bias_ ? (*bias_)[action]
                          : (successes_[action] + 1.0) / (successes_[action] + failures_[action] + 2.0);
  std::vector<WeightedPercept> out;
  if (p1 < 1.0) out.push_back({{0, 0.0}, 1.0 - p1});
  if (p1 > 0.0) out.push_back({{0, 1.0}, p1});
  return out;
}

void BetaBanditBelief::update(const InteractionStep& step) {
  if (step.action >= successes_.size()) throw std::invalid_argument("BetaBanditBelief: action out of range");
  const double r = step.percept.reward;
  if (step.percept.observation != 0 || (r != 0.0 && r != 1.0)) throw EvidenceError();
  if (bias_) {
    const double p1 = (*bias_)[step.action];
    if ((r == 1.0 && p1 == 0.0) || (r == 0.0 && p1 == 1.0)) throw EvidenceError();
  }
  (r == 1.0 ? successes_ : failures_)[step.action] += 1.0;
  ++timestep_;
}

double BetaBanditBelief::information_gain_since(const EnvironmentBelief& before) const {
  const auto* b = dynamic_cast<const BetaBanditBelief*>(&before);
  if (!b || b->successes_.size() != successes_.size()) {
    throw std::invalid_argument("information_gain_since: beliefs over different bandits");
  }
  if (bias_) return 0.0;
  double kl = 0.0;
  for (std::size_t i = 0; i < successes_.size(); ++i) {
    if (successes_[i] == b->successes_[i] && failures_[i] == b->failures_[i]) continue;
    kl += beta_kl_general(successes_[i] + 1.0, failures_[i] + 1.0, b->successes_[i] + 1.0,
                          b->failures_[i] + 1.0);
  }
  return kl;
}

std::unique_ptr<EnvironmentBelief> BetaBanditBelief::sample_environment(Rng& rng) const {
  if (bias_) return clone();
  std::vector<double> theta(successes_.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    // Inverse-CDF draw keeps the sample a fixed function of the uniform stream.
    theta[i] = boost::math::ibeta_inv(successes_[i] + 1.0, failures_[i] + 1.0, rng.uniform());
  }
  auto sampled = std::make_unique<BetaBanditBelief>(std::move(theta));
  sampled->timestep_ = timestep_;
  return sampled;
}

}  // namespace mentee
