#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "mentee/environments/gridworld.hpp"

namespace mentee {

enum class AgentKind { Mentee, MentorOnly, Thompson, BayesExp, Inq };

std::string agent_name(AgentKind kind);
AgentKind parse_agent(const std::string& name);

struct ExperimentConfig {
  AgentKind agent = AgentKind::Mentee;
  GridSampleParams grid;
  std::size_t steps = 2000;
  std::size_t runs = 20;
  std::uint64_t seed = 0;
  double eta = 0.1;
  double gamma = 0.99;
  std::size_t horizon = 6;
  std::size_t samples = 300;
  double ucb_c = std::sqrt(2.0);
  std::size_t ig_samples = 64;
  std::size_t workers = 1;
  std::string out = "results";

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// 10x10, T = 2000, 300 samples per decision, 20 runs.
ExperimentConfig desk_profile();
// As desk_profile() with 1200 samples per decision.
ExperimentConfig paper_profile();
ExperimentConfig profile(const std::string& name);

// Sets one key; throws std::invalid_argument on unknown keys or bad values.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

// Flat key=value lines over `base`; '#' starts a comment. Errors carry the line number.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});
std::string format_config(const ExperimentConfig& config);

}  // namespace mentee
