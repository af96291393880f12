#include "mentee/environments/heaven.hpp"

#include <algorithm>
#include <stdexcept>

namespace mentee {

HeavenWrapper::HeavenWrapper(std::shared_ptr<const Environment> base, TargetPolicy target,
                             Context context, std::size_t m, std::size_t n)
    : base_(std::move(base)), target_(std::move(target)), context_(std::move(context)), m_(m), n_(n) {
  if (!base_) throw std::invalid_argument("HeavenWrapper: null base environment");
  if (m_ == 0 || n_ == 0) throw std::invalid_argument("HeavenWrapper: m and n must be positive");
}

std::vector<Percept> HeavenWrapper::percept_space() const {
  std::vector<Percept> space = base_->percept_space();
  const double r_max = base_->reward_range().max;
  const std::size_t base_size = space.size();
  for (std::size_t i = 0; i < base_size; ++i) {
    Percept p{space[i].observation, r_max};
    if (std::find(space.begin(), space.end(), p) == space.end()) space.push_back(p);
  }
  return space;
}

namespace {

// Does a run of m target actions start at s and end at the last step of h?
bool execution_ends_at(HistoryView h, std::size_t end, std::size_t m,
                       const HeavenWrapper::Context& context,
                       const HeavenWrapper::TargetPolicy& target) {
  if (end + 1 < m) return false;
  const std::size_t s = end + 1 - m;
  if (!context(h.subspan(0, s))) return false;
  for (std::size_t k = s; k <= end; ++k) {
    if (h[k].action != target(h.subspan(0, k))) return false;
  }
  return true;
}

}  // namespace

std::size_t HeavenWrapper::completed_executions(HistoryView history) const {
  std::size_t count = 0;
  for (std::size_t end = 0; end < history.size(); ++end) {
    if (execution_ends_at(history, end, m_, context_, target_)) ++count;
  }
  return count;
}

bool HeavenWrapper::heaven_after(HistoryView history, Action action) const {
  std::size_t count = completed_executions(history);
  if (count >= n_) return true;
  if (count + 1 < n_) return false;
  // The final step's percept plays no part in whether it matches the target.
  const std::size_t t = history.size();
  if (t + 1 < m_) return false;
  const std::size_t s = t + 1 - m_;
  if (!context_(history.subspan(0, s))) return false;
  for (std::size_t k = s; k < t; ++k) {
    if (history[k].action != target_(history.subspan(0, k))) return false;
  }
  return action == target_(history);
}

double HeavenWrapper::probability(HistoryView history, Action action,
                                  const Percept& percept) const {
  if (!heaven_after(history, action)) return base_->probability(history, action, percept);
  if (percept.reward != base_->reward_range().max) return 0.0;
  double marginal = 0.0;
  for (const Percept& p : base_->percept_space()) {
    if (p.observation == percept.observation) marginal += base_->probability(history, action, p);
  }
  return marginal;
}

Percept HeavenWrapper::sample(HistoryView history, Action action, Rng& rng) const {
  Percept p = base_->sample(history, action, rng);
  if (heaven_after(history, action)) p.reward = base_->reward_range().max;
  return p;
}

Percept HeavenWrapper::step(HistoryView history, Action action, Rng& rng) {
  const std::size_t t = history.size();
  if (!in_heaven_) {
    if (context_(history)) active_starts_.push_back(t);
    const bool on_target = action == target_(history);
    std::vector<std::size_t> still;
    for (std::size_t s : active_starts_) {
      if (!on_target) continue;
      if (t + 1 - s == m_) {
        ++occurrences_;
      } else {
        still.push_back(s);
      }
    }
    active_starts_ = std::move(still);
    if (occurrences_ >= n_) in_heaven_ = true;
  }
  Percept p = base_->sample(history, action, rng);
  if (in_heaven_) p.reward = base_->reward_range().max;
  return p;
}

}  // namespace mentee
