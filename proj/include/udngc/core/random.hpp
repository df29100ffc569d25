#pragma once

#include <cstdint>
#include <initializer_list>

namespace udngc {

// SplitMix64 finalizer; used to derive independent stream seeds from
// (base_seed, index, ...) tuples so results never depend on evaluation order.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

// xoshiro256** generator. Satisfies UniformRandomBitGenerator so it can be
// handed to <random> distributions where convenient.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()();

  // Uniform on (0, 1): never returns 0, so log() is always finite.
  double uniform_open();
  // Uniform on [0, 1).
  double uniform();
  // Unit-mean exponential.
  double exponential();
  // Gamma(shape, 1) for integer shape (sum of exponentials).
  double gamma_int(int shape);
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t s_[4];
};

}  // namespace udngc
