#pragma once

// Double cubical diagrams: spaces E_I for I a subset of {1..r}, generalization
// maps gamma : E_I -> E_{I+a} and dual maps delta : E_{I+a} -> E_I, with both
// families forming commutative cubes. Subsets are bitmasks internally (bit
// a-1 for element a); the external encoding is a sorted list of elements.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schober/exactlin.hpp"

namespace schober {

using Subset = std::uint32_t;

inline constexpr std::size_t kMaxCubeRank = 16;

/// Sorted 1-based elements of s.
std::vector<std::size_t> elements(Subset s);
/// Inverse of elements(); throws InvalidInput on unsorted, repeated or
/// out-of-range input.
Subset subset_of(const std::vector<std::size_t>& elems, std::size_t r);
/// "[1,3]"
std::string subset_label(Subset s);

enum class Family { Gamma, Delta };

struct CubeEdge {
  Subset from_set;   // I
  std::size_t elem;  // a, 1-based, not in I
  friend auto operator<=>(const CubeEdge&, const CubeEdge&) = default;
};

struct DoubleCube {
  std::size_t r = 0;
  std::vector<std::size_t> dims;         // indexed by Subset, size 2^r
  std::map<CubeEdge, RatMatrix> gamma;   // E_I -> E_{I+a}
  std::map<CubeEdge, RatMatrix> delta;   // E_{I+a} -> E_I

  /// Every edge of the r-cube, in (I, a) order.
  [[nodiscard]] std::vector<CubeEdge> edges() const;
  friend bool operator==(const DoubleCube&, const DoubleCube&) = default;
};

struct CubeViolation {
  std::string kind;  // "shape", "missing_edge" or "face"
  Family family;
  Subset base;            // I
  std::size_t a = 0;      // 1-based
  std::size_t b = 0;      // 1-based, 0 for edge-level problems
  std::string detail;
};

std::vector<CubeViolation> validate_cube(const DoubleCube& c);
inline bool is_valid(const DoubleCube& c) { return validate_cube(c).empty(); }

/// Composite along the chain adding the elements of J \ I in increasing order
/// (gamma: E_I -> E_J; delta: E_J -> E_I). Identity when I = J.
RatMatrix composite(const DoubleCube& c, Family family, Subset from_set, Subset to_set);
/// As composite() but along the decreasing chain; for path-independence checks.
RatMatrix composite_reversed(const DoubleCube& c, Family family, Subset from_set, Subset to_set);

/// gamma' = delta^T, delta' = gamma^T.
DoubleCube dual_cube(const DoubleCube& c);

/// (gamma_{I, I+a}, delta_{I+a, I}).
std::pair<RatMatrix, RatMatrix> edge_pair(const DoubleCube& c, Subset from_set, std::size_t a);

/// A rank-one pair A_0 <-> A_1 (gamma : A_0 -> A_1, delta : A_1 -> A_0).
struct EdgeFactor {
  RatMatrix gamma;
  RatMatrix delta;
};

/// External tensor product of rank-one pairs: E_I = (x)_a A^{(a)}_{[a in I]},
/// with factor 1 outermost. Both families commute by construction.
DoubleCube product_cube(const std::vector<EdgeFactor>& factors);

}  // namespace schober
