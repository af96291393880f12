#include "mentee/core/discount.hpp"

#include <cmath>
#include <stdexcept>

namespace mentee {

DiscountSchedule DiscountSchedule::geometric(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("geometric discount needs gamma in (0, 1)");
  }
  return DiscountSchedule(Kind::Geometric, gamma, 0);
}

DiscountSchedule DiscountSchedule::finite(std::size_t horizon) {
  if (horizon == 0) {
    throw std::invalid_argument("finite discount needs a positive horizon");
  }
  return DiscountSchedule(Kind::Finite, 1.0, horizon);
}

double DiscountSchedule::gamma(std::size_t t) const {
  if (kind_ == Kind::Geometric) {
    return std::pow(gamma_, static_cast<double>(t));
  }
  return t < horizon_ ? 1.0 : 0.0;
}

double DiscountSchedule::tail(std::size_t t) const {
  if (kind_ == Kind::Geometric) {
    return std::pow(gamma_, static_cast<double>(t)) / (1.0 - gamma_);
  }
  return t < horizon_ ? static_cast<double>(horizon_ - t) : 0.0;
}

double DiscountSchedule::tail_ratio(std::size_t t, std::size_t k) const {
  if (kind_ == Kind::Geometric) {
    return std::pow(gamma_, static_cast<double>(k));
  }
  const double base = tail(t);
  if (!(base > 0.0)) {
    throw std::domain_error("tail ratio undefined once Gamma_t reaches 0");
  }
  return tail(t + k) / base;
}

std::size_t effective_horizon(const DiscountSchedule& schedule, double epsilon, std::size_t t) {
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw std::invalid_argument("effective horizon needs epsilon in (0, 1]");
  }
  for (std::size_t k = 0; k <= kHorizonSearchCap; ++k) {
    if (schedule.tail_ratio(t, k) <= epsilon) {
      return k;
    }
  }
  throw std::runtime_error("horizon cap exceeded");
}

double discounted_return(HistoryView segment, const DiscountSchedule& schedule, std::size_t t_start) {
  if (segment.empty()) {
    return 0.0;
  }
  double total = 0.0;
  for (std::size_t k = 0; k < segment.size(); ++k) {
    total += schedule.gamma(t_start + k) * segment[k].percept.reward;
  }
  return total / schedule.tail(t_start);
}

}  // namespace mentee
