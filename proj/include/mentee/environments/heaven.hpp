#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "mentee/core/model.hpp"

namespace mentee {

// nu^n_m: behaves like the base environment until the target policy has been
// executed for m consecutive steps starting from a context occurrence, n times.
// From the step that completes the n-th execution onwards every reward is the
// base environment's r_max; observations keep their base marginals.
class HeavenWrapper final : public Environment {
 public:
  using Context = std::function<bool(HistoryView)>;
  using TargetPolicy = std::function<Action(HistoryView)>;

  HeavenWrapper(std::shared_ptr<const Environment> base, TargetPolicy target, Context context,
                std::size_t m, std::size_t n);

  std::size_t num_actions() const override { return base_->num_actions(); }
  std::vector<Percept> percept_space() const override;
  RewardRange reward_range() const override { return base_->reward_range(); }
  double probability(HistoryView history, Action action, const Percept& percept) const override;
  Percept sample(HistoryView history, Action action, Rng& rng) const override;

  // Completed executions in h, recounted from scratch.
  std::size_t completed_executions(HistoryView history) const;
  // True when h followed by `action` completes at least n executions.
  bool heaven_after(HistoryView history, Action action) const;

  // Stateful stepping: history must be the run so far, in order, one call per step.
  Percept step(HistoryView history, Action action, Rng& rng);
  std::size_t occurrences() const { return occurrences_; }
  bool in_heaven() const { return in_heaven_; }
  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

 private:
  std::shared_ptr<const Environment> base_;
  TargetPolicy target_;
  Context context_;
  std::size_t m_;
  std::size_t n_;

  // Incremental tracking for step(): starts of executions still matching.
  std::vector<std::size_t> active_starts_;
  std::size_t occurrences_ = 0;
  bool in_heaven_ = false;
};

}  // namespace mentee
