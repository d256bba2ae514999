#pragma once

// Picard-Lefschetz transition calculus on quiver data.
//
// An arc between b_i and b_k is given extrinsically: a braid word moving the
// standard cuts to a system K', the endpoints, and optionally a marked point
// b_j that the arc goes around. In K'-coordinates q' = act(q, coords),
//   direct arc:    M_ik = u'_k v'_i
//   detour at j:   M_ik = u'_k T'_{Psi,j} v'_i
// The PL identity relates the two: u_k v_i = u_k T_j v_i + (u_k v_j)(u_j v_i).
// Orientation: the detour arc is gamma and the direct one gamma', for a
// positively oriented bigon around b_j. Swap roles to reverse it.

#include <cstddef>
#include <optional>

#include "schober/braid.hpp"

namespace schober {

struct ArcSpec {
  BraidWord coords;
  std::size_t i = 0;
  std::size_t k = 0;
  std::optional<std::size_t> detour;

  /// Throws IndexOutOfRange / InvalidInput for endpoints that are out of
  /// range, coincide, or hit the detour point.
  void check(std::size_t n) const;
};

RatMatrix transition(const PervQuiver& q, const ArcSpec& arc);

/// The three matrices of the decategorified PL triangle in coordinates
/// act(q, coords), and whether m_gamma_prime = m_gamma + composite.
struct PlTriangle {
  RatMatrix m_gamma;        // u_k T_j v_i
  RatMatrix m_gamma_prime;  // u_k v_i
  RatMatrix composite;      // (u_k v_j)(u_j v_i)
  bool additive = false;
};

PlTriangle pl_triangle_k0(const PervQuiver& q, std::size_t i, std::size_t j, std::size_t k, const BraidWord& coords);
bool pl_check(const PervQuiver& q, std::size_t i, std::size_t j, std::size_t k, const BraidWord& coords);

/// Total dimension of the vanishing cycles, sum of phi_dims.
std::size_t vanishing_total(const PervQuiver& q);

}  // namespace schober
