#pragma once

// Seeded generators for test instances and the `rand` command.

#include <cstddef>
#include <cstdint>

#include "schober/braid.hpp"
#include "schober/cube.hpp"
#include "schober/rng.hpp"
#include "schober/sympair.hpp"

namespace schober {

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound = 3);
/// Retries random_matrix until invertible.
RatMatrix random_invertible(Rng& rng, std::size_t size, std::int64_t bound = 3);

struct QuiverGen {
  std::size_t n = 1;
  std::size_t max_dim = 3;
  std::size_t min_psi = 1;  // Phi dimensions start at 0
  std::int64_t bound = 3;   // entries uniform in [-bound, bound]
};

/// Draws dimensions once, then redraws u, v until every twist is invertible.
PervQuiver random_quiver(Rng& rng, const QuiverGen& gen);

/// Uniform length in [0, max_len], letters uniform in +-1..n-1.
BraidWord random_word(Rng& rng, std::size_t n, std::size_t max_len);

/// base_change(quiver_to_pair(random one-point quiver)) with random
/// invertible changes of basis.
SymDiagram random_pair(Rng& rng, std::size_t max_dim);

/// Rank-one factor with dims in [1, max_dim] and nonzero gamma, delta.
EdgeFactor random_factor(Rng& rng, std::size_t max_dim);
DoubleCube random_cube(Rng& rng, std::size_t r, std::size_t max_dim);

}  // namespace schober
