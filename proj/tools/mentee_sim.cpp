#include <cstdio>
#include <exception>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mentee/agents/stops_exploring_values.hpp"
#include "mentee/bayes/beta.hpp"
#include "mentee/environments/bandit.hpp"
#include "mentee/environments/heaven.hpp"
#include "mentee/harness/config.hpp"
#include "mentee/harness/csv.hpp"
#include "mentee/harness/experiment.hpp"
#include "mentee/harness/summary.hpp"

using namespace mentee;

namespace {

struct RunOptions {
  std::string agent;
  std::string config;
  std::string out;
  std::string profile = "desk";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  std::optional<std::size_t> steps;
  std::optional<std::size_t> workers;
  bool quiet = false;
};

int run(const RunOptions& o) {
  ExperimentConfig c = profile(o.profile);
  if (!o.config.empty()) c = load_config(o.config, c);
  if (!o.agent.empty()) c.agent = parse_agent(o.agent);
  if (!o.out.empty()) c.out = o.out;
  if (o.seed) c.seed = *o.seed;
  if (o.runs) c.runs = *o.runs;
  if (o.steps) c.steps = *o.steps;
  if (o.workers) c.workers = *o.workers;
  c.validate();

  auto progress = [&](std::size_t done, std::size_t total) {
    if (!o.quiet) std::fprintf(stderr, "\r%s: %zu/%zu runs", agent_name(c.agent).c_str(), done, total);
  };
  const auto records = run_experiment(c, progress);
  if (!o.quiet) std::fprintf(stderr, "\n");
  const auto summary = summarize(records);
  const auto paths = write_outputs(c.out, agent_name(c.agent), records, summary);

  std::printf("agent %s, %zu runs x %zu steps, seed %llu\n", agent_name(c.agent).c_str(), c.runs, c.steps,
              static_cast<unsigned long long>(c.seed));
  std::printf("final avg reward  %.6f +/- %.6f  [%.6f, %.6f]\n", summary.final_avg_reward.mean,
              summary.final_avg_reward.std, summary.final_avg_reward.min, summary.final_avg_reward.max);
  std::printf("defer fraction    %.6f +/- %.6f\n", summary.defer_fraction.mean, summary.defer_fraction.std);
  std::printf("mean beta         %.6f +/- %.6f\n", summary.beta.mean, summary.beta.std);
  std::printf("trap frequency    %.3f\n", summary.trap_frequency);
  std::printf("wrote %s\nwrote %s\n", paths.runs.c_str(), paths.summary.c_str());
  return 0;
}

void stops_exploring_case() {
  std::printf("value(pi_{0}, t=0)          %.12f\n", stops_exploring_value({0}, 0));
  std::printf("value(pi_{}, t=0)           %.12f\n", stops_exploring_value({}, 0));
  std::printf("w(nu_inf | h_<n), S={100}    %.15f  (102/103 = %.15f)\n", stops_exploring_posterior_infinity({100}, 101),
              102.0 / 103.0);
  std::printf("bound on pi_{S+n}, n=101     %.12f\n", stops_exploring_extra_bound({100}, 101));
  std::printf("value(pi_{S+n}), n=101       %.12f\n", stops_exploring_value({100, 101}, 101));
  std::printf("value(pi_S), n=101           %.12f\n", stops_exploring_value({100}, 101));
}

void beta_ig_case() {
  std::printf("%10s %10s %14s %14s %14s\n", "n_plus", "n_minus", "kl(+1)", "eig", "n*eig");
  for (double n : {0.0, 1.0, 3.0, 10.0, 30.0, 100.0, 1000.0, 10000.0}) {
    const double plus = n / 2, minus = n - n / 2;
    std::printf("%10g %10g %14.10f %14.10f %14.10f\n", plus, minus, beta_kl(plus + 1, minus + 1),
                beta_bandit_expected_ig(plus, minus), n * beta_bandit_expected_ig(plus, minus));
  }
}

void bandit_case() {
  // Alternate arms on the two-armed bandit and report the expected
  // information gain of one more pull.
  TwoArmedBandit bandit;
  BetaBanditBelief belief(2);
  Rng rng(0);
  History h;
  std::printf("%8s %12s %12s %12s\n", "pulls", "eig(arm 0)", "eig(arm 1)", "pulls*eig0");
  for (std::size_t t = 0; t <= 4096; ++t) {
    if ((t & (t - 1)) == 0) {
      const double e0 = beta_bandit_expected_ig(belief.successes(0), belief.failures(0));
      const double e1 = beta_bandit_expected_ig(belief.successes(1), belief.failures(1));
      std::printf("%8zu %12.8f %12.8f %12.8f\n", t, e0, e1, static_cast<double>(t) / 2 * e0);
    }
    const Action a = t % 2;
    const InteractionStep step{false, a, bandit.sample(h.view(), a, rng)};
    belief.update(step);
    h.append(step);
  }
}

void demo_heaven() {
  // Heaven once the target (always arm 1) has run 3 steps from a context
  // (start of history or previous action 0) twice.
  auto base = std::make_shared<TwoArmedBandit>();
  HeavenWrapper heaven(
      base, [](HistoryView) { return Action{1}; },
      [](HistoryView h) { return h.empty() || h.back().action == 0; }, 3, 2);
  Rng rng(1);
  History h;
  const Action script[] = {0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 0, 0, 1};
  std::printf("%4s %6s %6s %11s %6s\n", "t", "action", "reward", "executions", "heaven");
  for (std::size_t t = 0; t < std::size(script); ++t) {
    const Percept p = heaven.step(h.view(), script[t], rng);
    h.append({false, script[t], p});
    std::printf("%4zu %6u %6g %11zu %6s\n", t, script[t], p.reward, heaven.completed_executions(h.view()),
                heaven.in_heaven() ? "yes" : "no");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mentor-guided Bayesian agents in a trap gridworld"};
  app.require_subcommand(1);

  RunOptions ro;
  auto* run_cmd = app.add_subcommand("run", "Run seeded experiments and write CSVs");
  run_cmd->add_option("--agent", ro.agent, "mentee, mentor-only, thompson, bayesexp or inq");
  run_cmd->add_option("--config", ro.config, "key=value config file");
  run_cmd->add_option("--out", ro.out, "output directory");
  run_cmd->add_option("--seed", ro.seed, "base seed");
  run_cmd->add_option("--runs", ro.runs, "number of runs");
  run_cmd->add_option("--steps", ro.steps, "timesteps per run");
  run_cmd->add_option("--workers", ro.workers, "worker threads");
  run_cmd->add_option("--profile", ro.profile, "desk or paper")->check(CLI::IsMember({"desk", "paper"}));
  run_cmd->add_flag("--quiet", ro.quiet, "no progress output");

  std::string which;
  auto* analytic = app.add_subcommand("analytic", "Print analytic example values");
  analytic->add_option("--case", which, "stops-exploring, beta-ig or bandit")
      ->required()
      ->check(CLI::IsMember({"stops-exploring", "beta-ig", "bandit"}));

  auto* heaven = app.add_subcommand("demo-heaven", "Step through a scripted heaven-environment trigger");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return run(ro);
    if (*analytic) {
      if (which == "stops-exploring") stops_exploring_case();
      else if (which == "beta-ig") beta_ig_case();
      else bandit_case();
    }
    if (*heaven) demo_heaven();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
