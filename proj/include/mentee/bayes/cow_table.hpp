#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace mentee {

// Fixed-size table whose copies share one base array. A copy records its own
// writes in a small overlay and folds them into a private base once the
// overlay grows, so cloning a per-cell posterior for planning is O(1).
template <class T>
class CowTable {
 public:
  static constexpr std::size_t kFlattenAt = 64;

  CowTable() = default;
  CowTable(std::size_t n, const T& init) : base_(std::make_shared<std::vector<T>>(n, init)) {}

  std::size_t size() const { return base_ ? base_->size() : 0; }

  const T& operator[](std::size_t i) const {
    for (const auto& [k, v] : overlay_) {
      if (k == i) return v;
    }
    return (*base_)[i];
  }

  void set(std::size_t i, const T& value) {
    if (base_.use_count() == 1) {
      fold();
      (*base_)[i] = value;
      return;
    }
    for (auto& [k, v] : overlay_) {
      if (k == i) {
        v = value;
        return;
      }
    }
    overlay_.emplace_back(i, value);
    if (overlay_.size() >= kFlattenAt) {
      base_ = std::make_shared<std::vector<T>>(*base_);
      fold();
    }
  }

  // Calls f(i) for every index where a and b may hold different values.
  template <class F>
  static void for_each_candidate(const CowTable& a, const CowTable& b, F&& f) {
    if (a.base_ != b.base_) {
      for (std::size_t i = 0; i < a.size(); ++i) f(i);
      return;
    }
    std::vector<std::size_t> keys;
    keys.reserve(a.overlay_.size() + b.overlay_.size());
    for (const auto& kv : a.overlay_) keys.push_back(kv.first);
    for (const auto& kv : b.overlay_) {
      bool seen = false;
      for (const auto& kv2 : a.overlay_) seen = seen || kv2.first == kv.first;
      if (!seen) keys.push_back(kv.first);
    }
    for (std::size_t i : keys) f(i);
  }

 private:
  void fold() {
    for (const auto& [k, v] : overlay_) (*base_)[k] = v;
    overlay_.clear();
  }

  std::shared_ptr<std::vector<T>> base_;
  std::vector<std::pair<std::size_t, T>> overlay_;
};

}  // namespace mentee
