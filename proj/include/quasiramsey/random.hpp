#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace quasiramsey {

/// Seeded generator used everywhere randomness is needed.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard, so a seed reproduces the same stream on every platform. Only the
/// raw 64-bit words are used; the derived draws below are defined here rather
/// than through <random> distributions, which are implementation-specific.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Always consumes exactly one word.
  bool bernoulli(double p) { return unit() < p; }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer over (base, stream); independent child seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace quasiramsey
