#pragma once

// Quiver models of perverse sheaves on a disk with n marked points.
//
// A PervQuiver is a space Psi together with spaces Phi_1..Phi_n and maps
// u_i : Psi -> Phi_i, v_i : Phi_i -> Psi such that every local twist
// T_{Psi,i} = Id - v_i u_i is invertible. Indices in the public API are
// 1-based; storage is 0-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schober/exactlin.hpp"

namespace schober {

struct PervQuiver {
  std::size_t n = 0;
  std::size_t psi_dim = 0;
  std::vector<std::size_t> phi_dims;
  std::vector<RatMatrix> u;  // u[i] : phi_dims[i] x psi_dim
  std::vector<RatMatrix> v;  // v[i] : psi_dim x phi_dims[i]

  /// Builds a quiver from its arrows, reading the dimensions off the shapes
  /// of u. Shapes are not checked here; use validate().
  static PervQuiver from_maps(std::size_t psi_dim, std::vector<RatMatrix> u, std::vector<RatMatrix> v);
  /// The quiver with every dimension zero.
  static PervQuiver zero(std::size_t n);
  /// n = 1, Psi = k, Phi = 0.
  static PervQuiver constant_sheaf();
  /// n = 1, Psi = 0, Phi = k.
  static PervQuiver skyscraper();

  friend bool operator==(const PervQuiver&, const PervQuiver&) = default;
};

struct Violation {
  std::string kind;    // "shape" or "twist_not_invertible"
  std::size_t index;   // 1-based marked point, 0 when not tied to one
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Reports each shape mismatch and each non-invertible twist; empty = valid.
std::vector<Violation> validate(const PervQuiver& q);
inline bool is_valid(const PervQuiver& q) { return validate(q).empty(); }
/// Throws InvalidInput listing the first violation.
void require_valid(const PervQuiver& q);

/// Id - v_i u_i on Psi.
RatMatrix twist_psi(const PervQuiver& q, std::size_t i);
/// Id - u_i v_i on Phi_i.
RatMatrix twist_phi(const PervQuiver& q, std::size_t i);
/// Id + u_i (T_{Psi,i})^{-1} v_i, the inverse of twist_phi(q, i).
RatMatrix twist_phi_inverse(const PervQuiver& q, std::size_t i);

/// u*_i = v_i^T, v*_i = u_i^T.
PervQuiver verdier_dual(const PervQuiver& q);

PervQuiver direct_sum(const PervQuiver& a, const PervQuiver& b);

/// Transports q along invertible g_psi on Psi and g_phi[i] on Phi_i:
/// u'_i = g_phi[i] u_i g_psi^{-1}, v'_i = g_psi v_i g_phi[i]^{-1}.
PervQuiver base_change(const PervQuiver& q, const RatMatrix& g_psi, const std::vector<RatMatrix>& g_phi);

struct QuiverMorphism {
  PervQuiver source;
  PervQuiver target;
  RatMatrix psi_map;
  std::vector<RatMatrix> phi_maps;
};

/// Checks shapes and both commutation families exactly.
bool is_morphism(const QuiverMorphism& f);
bool is_invertible(const QuiverMorphism& f);
QuiverMorphism identity_morphism(const PervQuiver& q);

/// Basis of Hom(a, b), obtained from the echelon kernel basis of the
/// commutation system (unknowns ordered X_Psi, X_Phi_1, ..., row-major).
std::vector<QuiverMorphism> hom_space(const PervQuiver& a, const PervQuiver& b);

enum class IsoVerdict { Yes, No, Unknown };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Unknown;
  std::optional<QuiverMorphism> certificate;  // set iff verdict == Yes
  std::string reason;
};

/// Randomized isomorphism test. No is only returned on a dimension
/// obstruction; Yes carries an invertible morphism; Unknown after `trials`
/// failed samples of random integer combinations of the hom basis.
IsoResult is_isomorphic(const PervQuiver& a, const PervQuiver& b, std::size_t trials, std::uint64_t seed);

}  // namespace schober
