#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>

namespace mentee {

// std::mt19937_64 (whose output sequence is fixed by the C++ standard) behind
// portable transforms, so a seed reproduces the same draws on any toolchain.
// Sub-streams are keyed with SplitMix64 via derive().
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  // Uniform integer in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  bool bernoulli(double p) { return uniform() < p; }
  // Index drawn proportionally to nonnegative weights with a positive sum.
  std::size_t categorical(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mentee
