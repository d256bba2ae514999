#pragma once

// Artin braid words and their action on PervQuiver.
//
// The generator s_i acts by
//   Phi'_i = Phi_{i+1}, u'_i = u_{i+1},          v'_i = v_{i+1},
//   Phi'_{i+1} = Phi_i, u'_{i+1} = u_i T_{i+1},   v'_{i+1} = T_{i+1}^{-1} v_i,
// with T_{i+1} = Id - v_{i+1} u_{i+1}; every other index is untouched.
// Words act left to right: act(q, [a, b]) = act_gen(act_gen(q, a), b).

#include <cstddef>
#include <string_view>
#include <vector>

#include "schober/quiver.hpp"

namespace schober {

struct BraidWord {
  std::size_t n = 0;
  std::vector<int> letters;  // k means s_|k|^sign(k)

  /// Throws InvalidInput if a letter is 0 or exceeds n - 1 in magnitude.
  void check() const;
  [[nodiscard]] BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses "1,-2,1" (whitespace tolerated, empty string = identity). Throws
/// Parse on bad syntax and InvalidInput on out-of-range letters.
BraidWord parse_word(std::size_t n, std::string_view text);

/// Free reduction only: cancels adjacent k, -k until none remain.
BraidWord reduce(const BraidWord& w);

PervQuiver act_gen(const PervQuiver& q, std::size_t i);
PervQuiver act_gen_inv(const PervQuiver& q, std::size_t i);
PervQuiver act(const PervQuiver& q, const BraidWord& w);

/// The s_i transform of the S-components of a coordinatized Schober,
/// decategorified: S_j = v_j, R_j = u_j, T_j = Id - S_j R_j. Returns the new
/// list of S-components.
std::vector<RatMatrix> shadow_act_gen(const PervQuiver& q, std::size_t i);

/// (T_{Psi,1}, ..., T_{Psi,n}).
std::vector<RatMatrix> local_monodromies(const PervQuiver& q);
/// T_{Psi,1} T_{Psi,2} ... T_{Psi,n}; Id_Psi when n = 0.
RatMatrix total_monodromy(const PervQuiver& q);

/// Hurwitz action on tuples of invertible matrices of a common size:
/// s_i : (T_i, T_{i+1}) -> (T_{i+1}, T_{i+1}^{-1} T_i T_{i+1}).
std::vector<RatMatrix> hurwitz_act(std::vector<RatMatrix> ts, const BraidWord& w);

}  // namespace schober
