#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mentee/core/model.hpp"

namespace mentee {

class EvidenceError : public std::runtime_error {
 public:
  EvidenceError() : std::runtime_error("evidence outside model class") {}
};

struct TruncatedPosterior {
  std::size_t count = 0;
  std::vector<double> weights;  // normalised over the first `count` models
};

// Evaluates models in order, accumulating w(nu) nu(h), until the prior mass
// not yet evaluated divided by the accumulated normaliser is at most epsilon.
// With min_models, at least that many models are evaluated.
TruncatedPosterior posterior_within_tolerance(std::span<const std::shared_ptr<const Environment>> models,
                                              std::span<const double> prior, HistoryView history,
                                              double epsilon,
                                              std::optional<std::size_t> min_models = std::nullopt);

// Policy version: only steps with the exploration flag set enter the likelihood.
TruncatedPosterior posterior_within_tolerance(std::span<const std::shared_ptr<const Policy>> models,
                                              std::span<const double> prior, HistoryView history,
                                              double epsilon,
                                              std::optional<std::size_t> min_models = std::nullopt);

// KL(p || q) in nats over a common support. Terms with p_i = 0 contribute 0.
double kl_divergence(std::span<const double> p, std::span<const double> q);

}  // namespace mentee
