#include <cmath>
#include <stdexcept>

#include "../support/toy_instances.hpp"
#include "doctest.h"
#include "mentee/bayes/finite_belief.hpp"
#include "mentee/environments/bandit.hpp"
#include "mentee/planners/expectimax.hpp"
#include "mentee/planners/rho_uct.hpp"

using namespace mentee;

namespace {

FiniteMixtureBelief single(std::shared_ptr<const Environment> env) { return FiniteMixtureBelief({std::move(env)}, {1.0}); }

PlannerConfig config(std::size_t horizon, std::size_t samples) {
  PlannerConfig c;
  c.horizon = horizon;
  c.samples = samples;
  return c;
}

}  // namespace

TEST_CASE("expectimax at depth zero") {
  auto b = single(std::make_shared<TwoArmedBandit>());
  auto r = expectimax(b, DiscountSchedule::geometric(0.9), 0);
  CHECK(r.action == 0);
  CHECK(r.value == 0.0);
}

TEST_CASE("expectimax on the two-armed bandit") {
  auto b = single(std::make_shared<TwoArmedBandit>());
  auto r = expectimax(b, DiscountSchedule::finite(5), 1);
  CHECK(r.action == 1);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  auto g = expectimax(b, DiscountSchedule::geometric(0.9), 3);
  CHECK(g.action == 1);
  CHECK(g.value == doctest::Approx((2.0 / 3.0) * (1 + 0.9 + 0.81)).epsilon(1e-12));
}

TEST_CASE("expectimax agrees with a from-scratch tree") {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t depth = 2 + trial % 2;
    auto p = toy::random_problem(rng, depth);
    FiniteMixtureBelief b(p.models, p.prior);
    toy::BruteForcePlanner oracle(p);
    std::vector<InteractionStep> h;
    auto qs = oracle.action_values(h, depth);
    auto r = expectimax(b, DiscountSchedule::finite(depth), depth);
    CHECK(r.value == doctest::Approx(*std::max_element(qs.begin(), qs.end())).epsilon(1e-12));
    CHECK(qs[r.action] == doctest::Approx(r.value).epsilon(1e-12));
  }
}

TEST_CASE("expectimax ignores the scale of the prior") {
  Rng rng(3);
  auto p = toy::random_problem(rng, 3);
  FiniteMixtureBelief a(p.models, p.prior);
  std::vector<double> scaled = p.prior;
  for (double& w : scaled) w *= 7.5;
  FiniteMixtureBelief b(p.models, scaled);
  auto ra = expectimax(a, DiscountSchedule::finite(3), 3);
  auto rb = expectimax(b, DiscountSchedule::finite(3), 3);
  CHECK(ra.action == rb.action);
  CHECK(ra.value == doctest::Approx(rb.value).epsilon(1e-14));
}

TEST_CASE("expectimax ties go to the lowest action") {
  auto b = single(toy::coin_env({0.5, 0.5, 0.5}));
  CHECK(expectimax(b, DiscountSchedule::finite(2), 2).action == 0);
}

TEST_CASE("expectimax budget") {
  auto b = single(toy::coin_env({0.5, 0.5}));
  CHECK(search_tree_size(b, 3) == 64);
  CHECK_THROWS_AS(expectimax(b, DiscountSchedule::finite(3), 3, 63), std::length_error);
}

TEST_CASE("rho-UCT finds a dominating action") {
  auto b = single(toy::coin_env({0.0, 1.0}));
  for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(rho_uct(b, config(1, 50), seed).action == 1);
}

TEST_CASE("rho-UCT balances identical actions") {
  auto b = single(toy::coin_env({1.0, 1.0}));
  const std::size_t kappa = 2000;
  auto r = rho_uct(b, config(1, kappa), 4);
  const double n = static_cast<double>(kappa - 1);
  const double sigma = std::sqrt(n * 0.25);
  CHECK(std::abs(static_cast<double>(r.actions[0].visits) - n / 2) < 3 * sigma);
}

TEST_CASE("rho-UCT visit accounting") {
  Rng rng(5);
  auto p = toy::random_problem(rng, 3);
  FiniteMixtureBelief b(p.models, p.prior);
  auto r = rho_uct(b, config(3, 500), 11);
  CHECK(r.root_visits == 500);
  std::size_t children = 0;
  for (const auto& a : r.actions) children += a.visits;
  // The first pass at a fresh node is a rollout that creates no child.
  CHECK(children + 1 == r.root_visits);
  for (const auto& a : r.actions) {
    if (a.visits == 0) continue;
    const double normalised = a.mean / 3.0;
    CHECK(normalised >= 0.0);
    CHECK(normalised <= 1.0);
  }
}

TEST_CASE("rho-UCT is deterministic given the seed") {
  Rng rng(6);
  auto p = toy::random_problem(rng, 2);
  FiniteMixtureBelief b(p.models, p.prior);
  auto x = rho_uct(b, config(2, 300), 99);
  auto y = rho_uct(b, config(2, 300), 99);
  CHECK(tree_stats_string(x) == tree_stats_string(y));
  CHECK(b.timestep() == 0);
}

TEST_CASE("rho-UCT rejects an empty budget") {
  auto b = single(toy::coin_env({0.5}));
  CHECK_THROWS_AS(rho_uct(b, config(1, 0), 0), std::invalid_argument);
}

TEST_CASE("rho-UCT agrees with expectimax on separated toy problems") {
  Rng rng(123);
  int agree = 0, total = 0;
  while (total < 20) {
    const std::size_t depth = 2;
    auto p = toy::random_problem(rng, depth);
    toy::BruteForcePlanner oracle(p);
    std::vector<InteractionStep> h;
    if (toy::value_gap(oracle.action_values(h, depth)) < 0.05) continue;
    FiniteMixtureBelief b(p.models, p.prior);
    const auto exact = expectimax(b, DiscountSchedule::finite(depth), depth);
    agree += rho_uct(b, config(depth, 2000), total).action == exact.action;
    ++total;
  }
  CHECK(agree >= 19);
}

TEST_CASE("information-gain planning prefers the informative action") {
  // Action 0 is a fair coin under both models; action 1 separates them.
  FiniteMixtureBelief b({toy::coin_env({0.5, 0.9}), toy::coin_env({0.5, 0.1})}, {0.5, 0.5});
  auto exact = expectimax(b, DiscountSchedule::finite(2), 1, kDefaultExpectimaxBudget, Objective::InformationGain);
  CHECK(exact.action == 1);
  CHECK(exact.value > 0.0);
  PlannerConfig c = config(1, 200);
  c.objective = Objective::InformationGain;
  auto r = rho_uct(b, c, 1);
  CHECK(r.action == 1);
  CHECK(r.value == doctest::Approx(exact.value).epsilon(0.2));
}

TEST_CASE("tree statistics dump") {
  auto b = single(toy::coin_env({0.0, 1.0}));
  auto s = tree_stats_string(rho_uct(b, config(1, 10), 0));
  CHECK(s.find("root visits=10") == 0);
  CHECK(s.find("action=1 visits=") != std::string::npos);
}
