#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mentee/harness/experiment.hpp"
#include "mentee/harness/summary.hpp"

namespace mentee {

inline constexpr const char* kRunsHeader = "timestep,run,reward,avg_reward,beta,deferred,trapped";
inline constexpr const char* kSummaryHeader = "timestep,mean_avg_reward,std_avg_reward";

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_summary_csv(std::ostream& out, const ExperimentSummary& summary);

struct OutputPaths {
  std::string runs;
  std::string summary;
};

// <dir>/<agent>_runs.csv and <dir>/<agent>.csv, creating dir. I/O errors
// name the path.
OutputPaths write_outputs(const std::string& dir, const std::string& agent, const std::vector<RunRecord>& records,
                          const ExperimentSummary& summary);

}  // namespace mentee
