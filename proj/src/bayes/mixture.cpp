#include "mentee/bayes/mixture.hpp"

#include <cmath>
#include <limits>

namespace mentee {

namespace {

template <class Likelihood>
TruncatedPosterior truncate(std::size_t n_models, std::span<const double> prior, double epsilon,
                            std::optional<std::size_t> min_models, Likelihood&& likelihood) {
  if (prior.size() != n_models) throw std::invalid_argument("posterior_within_tolerance: prior size mismatch");
  if (!(epsilon > 0.0)) throw std::invalid_argument("posterior_within_tolerance: epsilon must be positive");
  TruncatedPosterior out;
  double prior_left = 1.0;
  double normaliser = 0.0;
  std::size_t i = 0;
  auto ratio = [&] {
    return normaliser > 0.0 ? prior_left / normaliser : std::numeric_limits<double>::infinity();
  };
  while (i < n_models && (ratio() > epsilon || (min_models && i < *min_models))) {
    const double w = prior[i] * likelihood(i);
    out.weights.push_back(w);
    prior_left -= prior[i];
    normaliser += w;
    ++i;
  }
  if (!(normaliser > 0.0)) throw EvidenceError();
  out.count = i;
  for (double& w : out.weights) w /= normaliser;
  return out;
}

}  // namespace

TruncatedPosterior posterior_within_tolerance(std::span<const std::shared_ptr<const Environment>> models,
                                              std::span<const double> prior, HistoryView history,
                                              double epsilon, std::optional<std::size_t> min_models) {
  return truncate(models.size(), prior, epsilon, min_models, [&](std::size_t i) {
    double like = 1.0;
    for (std::size_t k = 0; k < history.size() && like > 0.0; ++k) {
      like *= models[i]->probability(history.subspan(0, k), history[k].action, history[k].percept);
    }
    return like;
  });
}

TruncatedPosterior posterior_within_tolerance(std::span<const std::shared_ptr<const Policy>> models,
                                              std::span<const double> prior, HistoryView history,
                                              double epsilon, std::optional<std::size_t> min_models) {
  return truncate(models.size(), prior, epsilon, min_models, [&](std::size_t i) {
    double like = 1.0;
    for (std::size_t k = 0; k < history.size() && like > 0.0; ++k) {
      if (!history[k].explored) continue;
      like *= models[i]->probability(history.subspan(0, k), history[k].action);
    }
    return like;
  });
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("kl_divergence: size mismatch");
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
    kl += p[i] * std::log(p[i] / q[i]);
  }
  // Rounding can push a true zero slightly negative.
  return kl < 0.0 ? 0.0 : kl;
}

}  // namespace mentee
