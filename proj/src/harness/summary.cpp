#include "mentee/harness/summary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mentee {

Stat summarize_values(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: no values");
  Stat s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

ExperimentSummary summarize(const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::invalid_argument("summarize: no runs");
  const std::size_t steps = records.front().steps();
  if (steps == 0) throw std::invalid_argument("summarize: empty run");
  for (const auto& r : records) {
    if (r.steps() != steps) throw std::invalid_argument("summarize: runs differ in length");
  }
  ExperimentSummary s;
  s.runs = records.size();
  std::vector<double> column(records.size());
  s.avg_reward.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    for (std::size_t i = 0; i < records.size(); ++i) column[i] = records[i].avg_rewards[t];
    s.avg_reward.push_back(summarize_values(column));
  }
  s.final_avg_reward = s.avg_reward.back();
  std::size_t trapped = 0;
  std::vector<double> betas(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    column[i] = records[i].defer_fraction();
    double sum = 0.0;
    for (double b : records[i].betas) sum += b;
    betas[i] = sum / static_cast<double>(steps);
    trapped += records[i].trap_step.has_value();
  }
  s.defer_fraction = summarize_values(column);
  s.beta = summarize_values(betas);
  s.trap_frequency = static_cast<double>(trapped) / static_cast<double>(records.size());
  return s;
}

}  // namespace mentee
