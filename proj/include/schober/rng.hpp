#pragma once

#include <cstdint>
#include <random>

namespace schober {

/// Seeded generator with a portable integer mapping, so output streams are
/// identical across standard libraries (std::uniform_int_distribution is
/// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent per-trial seeds from a master.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace schober
