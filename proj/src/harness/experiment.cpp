#include "mentee/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "mentee/agents/baselines.hpp"
#include "mentee/agents/mentee.hpp"
#include "mentee/agents/mentor.hpp"
#include "mentee/bayes/grid_belief.hpp"

namespace mentee {
namespace {

enum Stream : std::uint64_t { kLayoutStream = 1, kEnvStream = 2, kAgentStream = 3, kMentorStream = 4 };

}  // namespace

double RunRecord::defer_fraction() const {
  if (deferred.empty()) return 0.0;
  std::size_t n = 0;
  for (auto d : deferred) n += d;
  return static_cast<double>(n) / static_cast<double>(deferred.size());
}

std::uint64_t run_seed(const ExperimentConfig& config, std::size_t run_index) { return config.seed + run_index; }

std::unique_ptr<Agent> make_agent(const ExperimentConfig& config, const GridLayout& layout, std::uint64_t seed) {
  auto env = [&] {
    return std::make_unique<GridBelief>(layout.geometry, layout.rewards, layout.start, layout.wall_mask(layout.start));
  };
  PlanningOptions planning;
  planning.config.horizon = config.horizon;
  planning.config.samples = config.samples;
  planning.config.ucb_c = config.ucb_c;
  planning.config.gamma = config.gamma;
  ExplorationParams exploration;
  exploration.eta = config.eta;
  exploration.m_max = config.horizon;
  exploration.ig_samples = config.ig_samples;
  switch (config.agent) {
    case AgentKind::Mentee:
      return std::make_unique<MenteeAgent>(
          JointBelief(env(), std::make_unique<MentorGridPosterior>(layout.geometry.cells())), exploration, planning,
          seed);
    case AgentKind::MentorOnly: return std::make_unique<MentorOnlyAgent>();
    case AgentKind::Thompson: return std::make_unique<ThompsonAgent>(env(), planning, seed);
    case AgentKind::BayesExp:
      return std::make_unique<BayesExpAgent>(env(), planning,
                                             KnowledgeSeekingOptions{config.horizon, exploration.enumeration_budget},
                                             seed);
    case AgentKind::Inq: return std::make_unique<InqAgent>(env(), planning, exploration, seed);
  }
  throw std::invalid_argument("unknown agent kind");
}

GridLayout run_layout(const ExperimentConfig& config, std::size_t run_index) {
  return gridworld_sample(Rng::derive(run_seed(config, run_index), kLayoutStream), config.grid);
}

RunRecord run_single(const ExperimentConfig& config, std::size_t run_index) {
  config.validate();
  const std::uint64_t seed = run_seed(config, run_index);
  const GridLayout layout = run_layout(config, run_index);
  auto agent = make_agent(config, layout, Rng::derive(seed, kAgentStream));
  const MentorOracle mentor(layout);
  Gridworld world(layout);
  Rng env_rng(Rng::derive(seed, kEnvStream));
  Rng mentor_rng(Rng::derive(seed, kMentorStream));

  RunRecord r;
  r.run = run_index;
  r.seed = seed;
  r.rewards.reserve(config.steps);
  r.avg_rewards.reserve(config.steps);
  r.betas.reserve(config.steps);
  r.deferred.reserve(config.steps);
  double total = 0.0;
  for (std::size_t t = 1; t <= config.steps; ++t) {
    const Decision d = agent->act();
    const Action a = d.defer ? mentor.act(world.position(), world.trapped(), mentor_rng) : d.action;
    const Percept p = world.step(a, env_rng);
    agent->observe({d.defer, a, p});
    total += p.reward;
    r.rewards.push_back(p.reward);
    r.avg_rewards.push_back(total / static_cast<double>(t));
    r.betas.push_back(d.beta);
    r.deferred.push_back(d.defer ? 1 : 0);
    if (world.trapped() && !r.trap_step) r.trap_step = t;
  }
  return r;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config, const Progress& progress) {
  config.validate();
  std::vector<RunRecord> records(config.runs);
  std::atomic<std::size_t> next{0};
  std::size_t finished = 0;
  std::mutex mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= config.runs) return;
      try {
        records[i] = run_single(config, i);
      } catch (...) {
        const std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        next = config.runs;
        return;
      }
      const std::lock_guard lock(mutex);
      ++finished;
      if (progress) progress(finished, config.runs);
    }
  };
  const std::size_t n = std::min(config.workers, config.runs);
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < n; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace mentee
