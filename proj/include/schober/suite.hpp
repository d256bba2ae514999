#pragma once

// Randomized invariant suites over every module, as run by `schober suite`.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "schober/rng.hpp"

namespace schober {

struct Property {
  std::string name;
  std::function<bool(Rng&)> check;  // one trial; exceptions count as failure
};

const std::vector<Property>& builtin_properties();

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SuiteReport {
  std::vector<PropertyResult> results;
  [[nodiscard]] std::size_t total_failed() const;
};

/// Trial t of property p runs on Rng(mix_seed(mix_seed(seed, p), t)), so the
/// report does not depend on scheduling. Properties run concurrently.
SuiteReport run_suite(const std::vector<Property>& properties, std::size_t trials, std::uint64_t seed);

}  // namespace schober
