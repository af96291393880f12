#pragma once

#include <cstddef>

#include "mentee/core/types.hpp"

namespace mentee {

// gamma_t together with its tail sums Gamma_t = sum_{k >= t} gamma_k.
class DiscountSchedule {
 public:
  static DiscountSchedule geometric(double gamma);
  // gamma_k = 1 for k < horizon, 0 afterwards.
  static DiscountSchedule finite(std::size_t horizon);

  double gamma(std::size_t t) const;
  double tail(std::size_t t) const;
  // Gamma_{t+k} / Gamma_t.
  double tail_ratio(std::size_t t, std::size_t k) const;

  bool is_geometric() const { return kind_ == Kind::Geometric; }
  double geometric_factor() const { return gamma_; }

 private:
  enum class Kind { Geometric, Finite };
  DiscountSchedule(Kind kind, double gamma, std::size_t horizon)
      : kind_(kind), gamma_(gamma), horizon_(horizon) {}

  Kind kind_;
  double gamma_;
  std::size_t horizon_;
};

inline constexpr std::size_t kHorizonSearchCap = 1'000'000;

// min{k : Gamma_{t+k} / Gamma_t <= epsilon}.
std::size_t effective_horizon(const DiscountSchedule& schedule, double epsilon, std::size_t t);

// (1 / Gamma_{t_start}) * sum_k gamma_{t_start + k} r_k over the segment, with
// nothing assumed beyond its end.
double discounted_return(HistoryView segment, const DiscountSchedule& schedule, std::size_t t_start);

}  // namespace mentee
