#include "mentee/harness/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace mentee {
namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class Write>
void write_file(const std::string& path, Write&& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write(out);
  out.flush();
  if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kRunsHeader << '\n';
  for (const auto& r : records) {
    for (std::size_t t = 0; t < r.steps(); ++t) {
      out << t + 1 << ',' << r.run << ',' << number(r.rewards[t]) << ',' << number(r.avg_rewards[t]) << ','
          << number(r.betas[t]) << ',' << static_cast<int>(r.deferred[t]) << ',' << (r.trapped_at(t + 1) ? 1 : 0)
          << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, const ExperimentSummary& summary) {
  out << kSummaryHeader << '\n';
  for (std::size_t t = 0; t < summary.avg_reward.size(); ++t) {
    out << t + 1 << ',' << number(summary.avg_reward[t].mean) << ',' << number(summary.avg_reward[t].std) << '\n';
  }
}

OutputPaths write_outputs(const std::string& dir, const std::string& agent, const std::vector<RunRecord>& records,
                          const ExperimentSummary& summary) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir + ": " + ec.message());
  const std::filesystem::path base(dir);
  OutputPaths paths{(base / (agent + "_runs.csv")).string(), (base / (agent + ".csv")).string()};
  write_file(paths.runs, [&](std::ostream& out) { write_runs_csv(out, records); });
  write_file(paths.summary, [&](std::ostream& out) { write_summary_csv(out, summary); });
  return paths;
}

}  // namespace mentee
