#pragma once

// Linear shadow of spherical pairs: diagrams E_- <-> E_0 <-> E_+ with
//   (1) gamma_- delta_- = Id, gamma_+ delta_+ = Id
//   (2) gamma_- delta_+ and gamma_+ delta_- invertible,
// their projectors, conversions to and from one-point quivers, and the
// spherical quadruple (S, R, T_1, T_0) read off along ker gamma_+.

#include <cstddef>
#include <vector>

#include "schober/quiver.hpp"

namespace schober {

struct SymDiagram {
  std::size_t e_minus = 0;
  std::size_t e_zero = 0;
  std::size_t e_plus = 0;
  RatMatrix gamma_minus;  // E_0 -> E_-
  RatMatrix delta_minus;  // E_- -> E_0
  RatMatrix gamma_plus;   // E_0 -> E_+
  RatMatrix delta_plus;   // E_+ -> E_0

  friend bool operator==(const SymDiagram&, const SymDiagram&) = default;
};

/// s : D_0 -> D_1, r : D_1 -> D_0, t1 = Id - s r, t0 = Id - r s.
struct SphericalQuadruple {
  RatMatrix s;
  RatMatrix r;
  RatMatrix t1;
  RatMatrix t0;
};

std::vector<Violation> validate_pair(const SymDiagram& d);
void require_valid(const SymDiagram& d);

struct Projectors {
  RatMatrix minus;  // delta_- gamma_-
  RatMatrix plus;   // delta_+ gamma_+
};
Projectors projectors(const SymDiagram& d);

/// Psi = E_-, Phi = ker gamma_+ in its echelon basis B,
/// u = B^{-1} (Id - P_+) delta_-, v = gamma_- B.
PervQuiver pair_to_quiver(const SymDiagram& d);

/// E_- = E_+ = Psi, E_0 = Phi (+) Psi with coordinates (phi, psi):
/// delta_-(psi) = (0, psi), gamma_-(phi, psi) = psi + v phi,
/// delta_+(psi) = (-u psi, psi), gamma_+(phi, psi) = psi.
SymDiagram quiver_to_pair(const PervQuiver& q);

SphericalQuadruple spherical_quadruple(const SymDiagram& d);

/// Certifies Id - r s = gamma_- delta_+ gamma_+ delta_- and
/// Id - s r = (Id - P_+)(Id - P_-) restricted to ker gamma_+.
bool twist_identities_check(const SymDiagram& d);

/// Transport along invertible g0 on E_0, gm on E_-, gp on E_+.
SymDiagram base_change(const SymDiagram& d, const RatMatrix& g0, const RatMatrix& gm, const RatMatrix& gp);

}  // namespace schober
