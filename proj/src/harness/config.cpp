#include "mentee/harness/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace mentee {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::uint64_t to_unsigned(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
  if (v.empty() || v[0] == '-' || *end != '\0' || errno == ERANGE) {
    throw std::invalid_argument(key + ": expected a non-negative integer, got '" + v + "'");
  }
  return x;
}

double to_double(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0' || errno == ERANGE) {
    throw std::invalid_argument(key + ": expected a number, got '" + v + "'");
  }
  return x;
}

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string agent_name(AgentKind kind) {
  switch (kind) {
    case AgentKind::Mentee: return "mentee";
    case AgentKind::MentorOnly: return "mentor-only";
    case AgentKind::Thompson: return "thompson";
    case AgentKind::BayesExp: return "bayesexp";
    case AgentKind::Inq: return "inq";
  }
  return "?";
}

AgentKind parse_agent(const std::string& name) {
  for (AgentKind k : {AgentKind::Mentee, AgentKind::MentorOnly, AgentKind::Thompson, AgentKind::BayesExp,
                      AgentKind::Inq}) {
    if (agent_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown agent '" + name + "' (mentee, mentor-only, thompson, bayesexp, inq)");
}

void ExperimentConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("config: ") + what);
  };
  require(grid.width >= 1 && grid.height >= 1, "width and height must be positive");
  require(grid.width * grid.height >= 2, "grid needs at least two cells");
  require(grid.p_trap >= 0.0 && grid.p_dispenser >= 0.0 && grid.p_trap + grid.p_dispenser <= 1.0,
          "p_trap and p_dispenser must be probabilities summing to at most 1");
  require(steps >= 1, "steps must be positive");
  require(runs >= 1, "runs must be positive");
  require(eta > 0.0, "eta must be positive");
  require(gamma > 0.0 && gamma < 1.0, "gamma must lie in (0, 1)");
  require(horizon >= 1, "horizon must be positive");
  require(samples >= 1, "samples must be positive");
  require(ucb_c >= 0.0, "ucb_c must be non-negative");
  require(ig_samples >= 1, "ig_samples must be positive");
  require(workers >= 1, "workers must be positive");
}

ExperimentConfig desk_profile() { return ExperimentConfig{}; }

ExperimentConfig paper_profile() {
  ExperimentConfig c;
  c.samples = 1200;
  return c;
}

ExperimentConfig profile(const std::string& name) {
  if (name == "desk") return desk_profile();
  if (name == "paper") return paper_profile();
  throw std::invalid_argument("unknown profile '" + name + "' (desk, paper)");
}

void apply_setting(ExperimentConfig& c, const std::string& key, const std::string& v) {
  if (key == "agent") c.agent = parse_agent(v);
  else if (key == "width") c.grid.width = to_unsigned(key, v);
  else if (key == "height") c.grid.height = to_unsigned(key, v);
  else if (key == "p_trap") c.grid.p_trap = to_double(key, v);
  else if (key == "p_dispenser") c.grid.p_dispenser = to_double(key, v);
  else if (key == "min_dispenser_distance") c.grid.min_dispenser_distance = to_unsigned(key, v);
  else if (key == "steps") c.steps = to_unsigned(key, v);
  else if (key == "runs") c.runs = to_unsigned(key, v);
  else if (key == "seed") c.seed = to_unsigned(key, v);
  else if (key == "eta") c.eta = to_double(key, v);
  else if (key == "gamma") c.gamma = to_double(key, v);
  else if (key == "horizon") c.horizon = to_unsigned(key, v);
  else if (key == "samples") c.samples = to_unsigned(key, v);
  else if (key == "ucb_c") c.ucb_c = to_double(key, v);
  else if (key == "ig_samples") c.ig_samples = to_unsigned(key, v);
  else if (key == "workers") c.workers = to_unsigned(key, v);
  else if (key == "out") c.out = v;
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument("expected key=value");
      apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": " + e.what());
    }
  }
  return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  try {
    return parse_config(in, std::move(base));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string format_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "agent=" << agent_name(c.agent) << '\n'
      << "width=" << c.grid.width << '\n'
      << "height=" << c.grid.height << '\n'
      << "p_trap=" << number(c.grid.p_trap) << '\n'
      << "p_dispenser=" << number(c.grid.p_dispenser) << '\n'
      << "min_dispenser_distance=" << c.grid.min_dispenser_distance << '\n'
      << "steps=" << c.steps << '\n'
      << "runs=" << c.runs << '\n'
      << "seed=" << c.seed << '\n'
      << "eta=" << number(c.eta) << '\n'
      << "gamma=" << number(c.gamma) << '\n'
      << "horizon=" << c.horizon << '\n'
      << "samples=" << c.samples << '\n'
      << "ucb_c=" << number(c.ucb_c) << '\n'
      << "ig_samples=" << c.ig_samples << '\n'
      << "workers=" << c.workers << '\n'
      << "out=" << c.out << '\n';
  return out.str();
}

}  // namespace mentee
