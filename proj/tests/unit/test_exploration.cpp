#include <cmath>
#include <stdexcept>

#include "../support/oracles.hpp"
#include "../support/toy_instances.hpp"
#include "doctest.h"
#include "mentee/bayes/beta.hpp"
#include "mentee/bayes/finite_belief.hpp"
#include "mentee/bayes/grid_belief.hpp"
#include "mentee/environments/layout_io.hpp"
#include "mentee/exploration/exploration_probability.hpp"
#include "mentee/exploration/information_gain.hpp"
#include "mentee/exploration/knowledge_seeking.hpp"

using namespace mentee;

namespace {

JointBelief with_mentor(std::unique_ptr<EnvironmentBelief> env, std::size_t actions, Action chosen) {
  return JointBelief(std::move(env), std::make_unique<FinitePolicyMixture>(
                                         std::vector<std::shared_ptr<const Policy>>{toy::constant_policy(actions, chosen)},
                                         std::vector<double>{1.0}));
}

JointBelief grid_joint(const GridLayout& layout) {
  return JointBelief(std::make_unique<GridBelief>(layout.geometry, layout.rewards, layout.start,
                                                  layout.wall_mask(layout.start)),
                     std::make_unique<MentorGridPosterior>(layout.geometry.cells()));
}

}  // namespace

TEST_CASE("no information to gain from degenerate posteriors") {
  auto j = with_mentor(std::make_unique<FiniteMixtureBelief>(std::vector<std::shared_ptr<const Environment>>{toy::coin_env({0.3})},
                                                             std::vector<double>{1.0}),
                       1, 0);
  ExplorationParams p;
  for (std::size_t m = 1; m <= 4; ++m) CHECK(expected_ig_value(j, m, p, 1) == 0.0);
}

TEST_CASE("one-step expected information gain by hand") {
  const double p1 = 0.7, p2 = 0.2, w1 = 0.4;
  auto j = with_mentor(std::make_unique<FiniteMixtureBelief>(
                           std::vector<std::shared_ptr<const Environment>>{toy::coin_env({p1}), toy::coin_env({p2})},
                           std::vector<double>{w1, 1 - w1}),
                       1, 0);
  double expected = 0.0;
  for (int r = 0; r < 2; ++r) {
    const double l1 = r ? p1 : 1 - p1, l2 = r ? p2 : 1 - p2;
    const double xi = w1 * l1 + (1 - w1) * l2;
    const double a = w1 * l1 / xi, b = (1 - w1) * l2 / xi;
    expected += xi * (a * std::log(a / w1) + b * std::log(b / (1 - w1)));
  }
  CHECK(expected_ig_value(j, 1, ExplorationParams{}, 0) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("expected information gain of an arm pull under a fixed mentor") {
  for (Action arm : {0u, 1u}) {
    auto bandit = std::make_unique<BetaBanditBelief>(2);
    bandit->update({true, arm, {0, 1.0}});
    bandit->update({true, arm, {0, 1.0}});
    bandit->update({true, arm, {0, 0.0}});
    auto j = with_mentor(std::move(bandit), 2, arm);
    CHECK(expected_ig_value(j, 1, ExplorationParams{}, 0) ==
          doctest::Approx(beta_bandit_expected_ig(2, 1)).epsilon(1e-12));
  }
}

TEST_CASE("exact and Monte-Carlo information gain agree") {
  auto layout = parse_layout_string("EEE\nEEE\n");
  auto j = grid_joint(layout);
  ExplorationParams exact;
  exact.enumeration_budget = 192 * 192;
  ExplorationParams mc;
  mc.enumeration_budget = 1;
  mc.ig_samples = 4000;
  auto e = expected_ig_values(j, 2, exact, 0);
  auto s = expected_ig_values(j, 2, mc, 7);
  CHECK(e.exact_depth == 2);
  CHECK(s.exact_depth == 0);
  for (std::size_t m = 0; m < 2; ++m) {
    CHECK(s.standard_errors[m] > 0.0);
    CHECK(std::abs(e.values[m] - s.values[m]) < 4 * s.standard_errors[m]);
  }
  CHECK(e.values[1] >= e.values[0]);
}

TEST_CASE("information gain estimates are reproducible") {
  auto j = grid_joint(gridworld_sample(2, {4, 4, 0.2, 0.2, 2, 1000}));
  ExplorationParams p;
  auto a = expected_ig_values(j, 6, p, 42);
  auto b = expected_ig_values(j, 6, p, 42);
  CHECK(a.values == b.values);
  CHECK(a.exact_depth == 1);
  for (double v : a.values) CHECK(v >= 0.0);
}

TEST_CASE("a mentor model is required") {
  JointBelief j(std::make_unique<BetaBanditBelief>(2), nullptr);
  CHECK_THROWS_AS(expected_ig_value(j, 1, ExplorationParams{}, 0), std::invalid_argument);
}

TEST_CASE("exploration probability arithmetic") {
  auto zeros = [](std::size_t, std::size_t) { return 0.0; };
  CHECK(exploration_probability(zeros, 10, 6, 0.1).beta == 0.0);
  auto tens = [](std::size_t, std::size_t) { return 10.0; };
  auto r = exploration_probability(tens, 5, 2, 0.1);
  CHECK(std::abs(r.beta - 0.5833333333333333) < 1e-12);
  CHECK(std::abs(r.beta - (0.5 + 2.0 / 12.0 * 0.5)) < 1e-15);
  CHECK(r.tail_bound == doctest::Approx(1.0 / 3.0));
  // Only k <= t counts early on.
  CHECK(std::abs(exploration_probability(tens, 0, 2, 0.1).beta - (0.5 + 0.5 / 12.0)) < 1e-15);
}

TEST_CASE("saturated exploration probability stays below one") {
  auto huge = [](std::size_t, std::size_t) { return 1e9; };
  double prev = 0.0;
  for (std::size_t m_max : {1u, 2u, 10u, 100u, 1000u}) {
    const double b = exploration_probability(huge, 5000, m_max, 0.1).beta;
    CHECK(b <= 1.0);
    CHECK(b >= prev);
    prev = b;
  }
  CHECK(prev == doctest::Approx(1.0 - 1.0 / 1001.0).epsilon(1e-9));
}

TEST_CASE("exploration probability is monotone in each cached value") {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    IGCache cache(6);
    for (int i = 0; i < 8; ++i) {
      std::vector<double> v(6);
      for (double& x : v) x = 30 * rng.uniform();
      cache.push(v);
    }
    const std::size_t m = 1 + rng.below(6), k = rng.below(m);
    auto base = [&](std::size_t mm, std::size_t kk) { return cache.value(mm, kk); };
    auto bumped = [&](std::size_t mm, std::size_t kk) { return cache.value(mm, kk) + (mm == m && kk == k ? 5.0 : 0.0); };
    CHECK(exploration_probability(bumped, 20, 6, 0.1).beta >= exploration_probability(base, 20, 6, 0.1).beta);
  }
}

TEST_CASE("cache entries are lagged evaluations") {
  auto layout = gridworld_sample(5, {4, 4, 0.1, 0.3, 2, 1000});
  auto j = grid_joint(layout);
  Gridworld world(layout);
  Rng rng(5);
  ExplorationParams p;
  p.m_max = 3;
  IGCache cache(3);
  std::vector<std::vector<double>> fresh;
  for (int t = 0; t < 8; ++t) {
    auto v = expected_ig_values(j, 3, p, 100 + t).values;
    cache.push(v);
    fresh.push_back(v);
    for (std::size_t m = 1; m <= 3; ++m) {
      for (std::size_t k = 0; k <= std::min<std::size_t>(m - 1, t); ++k) CHECK(cache.value(m, k) == fresh[t - k][m - 1]);
    }
    const Action a = static_cast<Action>(rng.below(4));
    j.update({true, a, world.step(a, rng)});
  }
  CHECK_THROWS_AS(cache.value(1, 3), std::out_of_range);
}

TEST_CASE("knowledge seeking with a degenerate posterior") {
  FiniteMixtureBelief b({toy::coin_env({0.2, 0.7})}, {1.0});
  auto r = ks_exploration_value(b, 3, PlannerConfig{}, 1 << 20, 0);
  CHECK(r.value == 0.0);
  CHECK_FALSE(bayesexp_should_explore(b, 1e-12, 3, PlannerConfig{}, 1 << 20, 0));
}

TEST_CASE("knowledge seeking picks the single informative action") {
  FiniteMixtureBelief b({toy::coin_env({0.5, 0.5, 0.9}), toy::coin_env({0.5, 0.5, 0.1})}, {0.5, 0.5});
  auto r = ks_exploration_value(b, 1, PlannerConfig{}, 1 << 20, 0);
  CHECK(r.action == 2);
  CHECK(r.value > 0.0);
  CHECK(bayesexp_should_explore(b, 1e-9, 1, PlannerConfig{}, 1 << 20, 0));
  CHECK_FALSE(bayesexp_should_explore(b, INFINITY, 1, PlannerConfig{}, 1 << 20, 0));
}

TEST_CASE("two-step knowledge seeking against exhaustive policy trees") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = toy::random_problem(rng, 2, 3);
    FiniteMixtureBelief b(p.models, p.prior);
    const std::vector<Percept> space = p.models.front()->percept_space();
    // A policy tree is a first action plus a second action for each percept.
    double best = -1.0;
    const std::size_t trees = 2 * 16;
    for (std::size_t code = 0; code < trees; ++code) {
      const Action a0 = code % 2;
      double total = 0.0;
      for (std::size_t e0 = 0; e0 < 4; ++e0) {
        const Action a1 = (code / 2 >> e0) & 1u;
        for (std::size_t e1 = 0; e1 < 4; ++e1) {
          std::vector<InteractionStep> h{{false, a0, space[e0]}, {false, a1, space[e1]}};
          // Joint probability and posterior from scratch.
          std::vector<double> post(p.models.size());
          double z = 0.0;
          for (std::size_t i = 0; i < post.size(); ++i) {
            post[i] = p.prior[i] * p.models[i]->probability({}, a0, space[e0]) *
                      p.models[i]->probability(HistoryView(h).subspan(0, 1), a1, space[e1]);
            z += post[i];
          }
          if (z <= 0.0) continue;
          double kl = 0.0;
          for (std::size_t i = 0; i < post.size(); ++i) {
            const double q = post[i] / z;
            if (q > 0.0) kl += q * std::log(q / p.prior[i]);
          }
          total += z * kl;
        }
      }
      best = std::max(best, total);
    }
    CHECK(ks_exploration_value(b, 2, PlannerConfig{}, 1 << 20, 0).value == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("explore decision in a two-cell world") {
  // Stepping right reveals the unknown cell; the enumerated posterior gives the value.
  auto layout = parse_layout_string("EE\n");
  GridBelief b(layout.geometry, layout.rewards, 0, layout.wall_mask(0));
  oracle::EnumeratedGridPosterior brute(layout.geometry, layout.wall_mask(0));
  double brute_value = 0.0;
  for (Observation o = 0; o < 16; ++o) {
    for (double r : {0.0, 1.0, -30.0}) {
      const Percept p{o, r};
      const double q = brute.predictive(kRight, p);
      if (q <= 0.0) continue;
      auto next = brute;
      next.update(kRight, p);
      auto before = brute.cell_marginal(1), after = next.cell_marginal(1);
      brute_value += q * kl_divergence(after, before);
    }
  }
  auto r = ks_exploration_value(b, 1, PlannerConfig{}, 1 << 20, 0);
  CHECK(r.action == kRight);
  CHECK(r.value == doctest::Approx(brute_value).epsilon(1e-12));
  CHECK(bayesexp_should_explore(b, brute_value * 0.99, 1, PlannerConfig{}, 1 << 20, 0));
  CHECK_FALSE(bayesexp_should_explore(b, brute_value * 1.01, 1, PlannerConfig{}, 1 << 20, 0));
}

TEST_CASE("diminishing threshold") {
  CHECK(bayesexp_threshold(0) == 1.0);
  CHECK(bayesexp_threshold(3) == 0.5);
}
