#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "mentee/harness/config.hpp"
#include "mentee/harness/csv.hpp"
#include "mentee/harness/experiment.hpp"
#include "mentee/harness/summary.hpp"

using namespace mentee;

namespace {

ExperimentConfig tiny(AgentKind agent, std::size_t steps = 40, std::size_t runs = 2) {
  ExperimentConfig c;
  c.agent = agent;
  c.grid = {5, 5, 0.2, 0.2, 3, 1000};
  c.steps = steps;
  c.runs = runs;
  c.seed = 7;
  c.samples = 30;
  c.horizon = 3;
  c.ig_samples = 8;
  return c;
}

RunRecord synthetic(std::size_t run, std::vector<double> rewards) {
  RunRecord r;
  r.run = run;
  double total = 0.0;
  for (std::size_t t = 0; t < rewards.size(); ++t) {
    total += rewards[t];
    r.avg_rewards.push_back(total / static_cast<double>(t + 1));
    r.betas.push_back(0.0);
    r.deferred.push_back(0);
  }
  r.rewards = std::move(rewards);
  return r;
}

}  // namespace

TEST_CASE("profiles") {
  const auto desk = profile("desk");
  CHECK(desk.grid.width == 10);
  CHECK(desk.grid.height == 10);
  CHECK(desk.steps == 2000);
  CHECK(desk.samples == 300);
  CHECK(desk.runs == 20);
  CHECK(desk.eta == 0.1);
  CHECK(desk.gamma == 0.99);
  CHECK(desk.horizon == 6);
  CHECK(profile("paper").samples == 1200);
  CHECK_THROWS_AS(profile("laptop"), std::invalid_argument);
}

TEST_CASE("config parsing") {
  std::istringstream in("# comment\nagent = thompson\nwidth=4\n\nheight=3 # trailing\np_trap=0.1\nseed=99\nout=/tmp/x\n");
  const auto c = parse_config(in);
  CHECK(c.agent == AgentKind::Thompson);
  CHECK(c.grid.width == 4);
  CHECK(c.grid.height == 3);
  CHECK(c.grid.p_trap == 0.1);
  CHECK(c.seed == 99);
  CHECK(c.out == "/tmp/x");
  CHECK(c.samples == 300);

  std::istringstream round(format_config(c));
  CHECK(format_config(parse_config(round)) == format_config(c));

  std::istringstream bad("width=4\nbogus=1\n");
  CHECK_THROWS_WITH_AS(parse_config(bad), "config line 2: unknown config key 'bogus'", std::invalid_argument);
  std::istringstream negative("steps=-3\n");
  CHECK_THROWS_AS(parse_config(negative), std::invalid_argument);
  std::istringstream noeq("steps\n");
  CHECK_THROWS_AS(parse_config(noeq), std::invalid_argument);
  CHECK_THROWS_AS(parse_agent("aixi"), std::invalid_argument);
  CHECK(parse_agent("mentor-only") == AgentKind::MentorOnly);
  CHECK_THROWS_WITH_AS(load_config("/nonexistent/x.cfg"), "cannot open config /nonexistent/x.cfg", std::runtime_error);
}

TEST_CASE("config validation") {
  auto c = tiny(AgentKind::Mentee);
  c.validate();
  c.runs = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = tiny(AgentKind::Mentee);
  c.gamma = 1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = tiny(AgentKind::Mentee);
  c.grid.p_trap = 0.7;
  c.grid.p_dispenser = 0.7;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("summaries") {
  CHECK_THROWS_AS(summarize({}), std::invalid_argument);
  CHECK_THROWS_AS(summarize_values(std::vector<double>{}), std::invalid_argument);

  const auto one = summarize({synthetic(0, {1.0, 0.0, -30.0})});
  CHECK(one.final_avg_reward.mean == doctest::Approx(-29.0 / 3));
  CHECK(one.final_avg_reward.std == 0.0);

  const auto two = summarize({synthetic(0, {2.0, 2.0}), synthetic(1, {5.0, 5.0})});
  CHECK(two.final_avg_reward.mean == 3.5);
  CHECK(two.final_avg_reward.std == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(two.final_avg_reward.min == 2.0);
  CHECK(two.final_avg_reward.max == 5.0);

  // Sum-of-squares formula, as a spreadsheet would do it.
  Rng rng(3);
  std::vector<RunRecord> runs;
  std::vector<double> finals;
  for (std::size_t i = 0; i < 20; ++i) {
    std::vector<double> r(50);
    for (double& x : r) x = rng.bernoulli(0.1) ? -30.0 : (rng.bernoulli(0.5) ? 1.0 : 0.0);
    runs.push_back(synthetic(i, r));
    finals.push_back(runs.back().avg_rewards.back());
  }
  double s = 0.0, s2 = 0.0;
  for (double f : finals) s += f, s2 += f * f;
  const double mean = s / 20, sd = std::sqrt((s2 - 20 * mean * mean) / 19);
  const auto many = summarize(runs);
  CHECK(many.final_avg_reward.mean == doctest::Approx(mean).epsilon(1e-12));
  CHECK(many.final_avg_reward.std == doctest::Approx(sd).epsilon(1e-9));
  CHECK(many.avg_reward.size() == 50);

  runs.back().rewards.pop_back();
  runs.back().avg_rewards.pop_back();
  CHECK_THROWS_AS(summarize(runs), std::invalid_argument);
}

TEST_CASE("run records are consistent") {
  for (AgentKind kind : {AgentKind::Mentee, AgentKind::Thompson, AgentKind::BayesExp, AgentKind::Inq}) {
    const auto r = run_single(tiny(kind), 0);
    REQUIRE(r.steps() == 40);
    double total = 0.0;
    for (std::size_t t = 0; t < r.steps(); ++t) {
      total += r.rewards[t];
      CHECK(std::abs(r.avg_rewards[t] - total / static_cast<double>(t + 1)) < 1e-9);
      CHECK((r.betas[t] >= 0.0 && r.betas[t] <= 1.0));
      if (kind != AgentKind::Mentee) CHECK(r.deferred[t] == 0);
    }
    if (r.trap_step) CHECK(r.rewards[*r.trap_step - 1] == -30.0);
  }
}

TEST_CASE("mentor-only never enters a trap") {
  auto c = tiny(AgentKind::MentorOnly, 500, 3);
  c.grid.p_trap = 0.0;
  for (const auto& r : run_experiment(c)) {
    CHECK_FALSE(r.trap_step.has_value());
    CHECK(r.defer_fraction() == 1.0);
  }
  c.grid.p_trap = 0.25;
  for (const auto& r : run_experiment(c)) CHECK_FALSE(r.trap_step.has_value());
}

TEST_CASE("per-run seeds") {
  auto c = tiny(AgentKind::Thompson, 30, 3);
  const auto base = run_experiment(c);
  CHECK(base[1].seed == c.seed + 1);
  auto shifted = c;
  shifted.seed = c.seed + 1;
  const auto other = run_single(shifted, 0);
  CHECK(other.rewards == base[1].rewards);
  CHECK(other.betas == base[1].betas);
  // Layouts depend on the run seed only, so every agent meets the same grids.
  auto mentee = c;
  mentee.agent = AgentKind::Mentee;
  CHECK(run_layout(mentee, 2).cells == run_layout(c, 2).cells);
}

TEST_CASE("worker count does not change results") {
  auto c = tiny(AgentKind::Mentee, 30, 4);
  const auto serial = run_experiment(c);
  c.workers = 3;
  std::size_t calls = 0;
  const auto parallel = run_experiment(c, [&](std::size_t done, std::size_t total) {
    ++calls;
    CHECK(done <= total);
  });
  CHECK(calls == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(serial[i].run == parallel[i].run);
    CHECK(serial[i].rewards == parallel[i].rewards);
    CHECK(serial[i].deferred == parallel[i].deferred);
  }
}

TEST_CASE("csv output") {
  const std::vector<RunRecord> runs{synthetic(0, {1.0, 0.0}), synthetic(1, {0.0, -30.0})};
  auto trapped = runs;
  trapped[1].trap_step = 2;
  std::ostringstream out;
  write_runs_csv(out, trapped);
  CHECK(out.str() ==
        "timestep,run,reward,avg_reward,beta,deferred,trapped\n"
        "1,0,1,1,0,0,0\n2,0,0,0.5,0,0,0\n1,1,0,0,0,0,0\n2,1,-30,-15,0,0,1\n");
  std::ostringstream sum;
  write_summary_csv(sum, summarize(trapped));
  CHECK(sum.str().rfind("timestep,mean_avg_reward,std_avg_reward\n1,0.5,", 0) == 0);

  const auto dir = std::filesystem::temp_directory_path() / "mentee_csv_test";
  std::filesystem::remove_all(dir);
  const auto paths = write_outputs(dir.string(), "mentee", trapped, summarize(trapped));
  CHECK(paths.runs == (dir / "mentee_runs.csv").string());
  std::ifstream back(paths.runs);
  std::stringstream content;
  content << back.rdbuf();
  CHECK(content.str() == out.str());

  // A regular file where the directory should be.
  const auto blocker = dir / "blocker";
  std::ofstream(blocker.string()) << "x";
  try {
    write_outputs((blocker / "sub").string(), "mentee", trapped, summarize(trapped));
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find((blocker / "sub").string()) != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}
