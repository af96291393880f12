#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mentee/bayes/belief.hpp"

namespace mentee {

struct ExplorationParams {
  double eta = 0.1;
  std::size_t m_max = 6;
  std::size_t ig_samples = 64;
  // Largest (|A| * max percepts)^m evaluated by exact enumeration.
  std::size_t enumeration_budget = 256;
  // Agents feed beta information gain in bits, so eta = 0.1 saturates at 10 bits.
  bool in_bits = true;
};

// Cache entry for a value in nats under params.in_bits.
double ig_units(double nats, const ExplorationParams& params);

struct IGValues {
  // values[m - 1] = V^IG_{m,0}: expected information gain of m mentor-chosen steps.
  std::vector<double> values;
  std::vector<double> standard_errors;  // 0 for exactly enumerated entries
  std::size_t exact_depth = 0;          // entries 1..exact_depth are exact
};

// V^IG_{m,0} for m = 1..m_max under pi-bar and xi with every step deferred.
// Short horizons within the enumeration budget are summed exactly; longer ones
// share ig_samples Monte-Carlo fragments of length m_max, each prefix of which
// gives one sample for the corresponding m. Requires a mentor model.
IGValues expected_ig_values(const JointBelief& belief, std::size_t m_max, const ExplorationParams& params,
                            std::uint64_t seed);

double expected_ig_value(const JointBelief& belief, std::size_t m, const ExplorationParams& params,
                         std::uint64_t seed);

}  // namespace mentee
