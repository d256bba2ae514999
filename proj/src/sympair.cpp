#include "schober/sympair.hpp"

#include <string>

namespace schober {

namespace {

bool has_shape(const RatMatrix& m, std::size_t r, std::size_t c) { return m.rows() == r && m.cols() == c; }

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

// Expresses (Id - P_+) delta_- in the echelon basis of ker gamma_+.
RatMatrix s_map(const SymDiagram& d, const RatMatrix& kernel_plus) {
  const RatMatrix id0 = RatMatrix::identity(d.e_zero);
  return solve_in_basis(kernel_plus, (id0 - d.delta_plus * d.gamma_plus) * d.delta_minus);
}

}  // namespace

std::vector<Violation> validate_pair(const SymDiagram& d) {
  std::vector<Violation> out;
  auto shape = [&](const RatMatrix& m, std::size_t r, std::size_t c, const char* name) {
    if (!has_shape(m, r, c)) {
      out.push_back({"shape", 0,
                     std::string(name) + " has shape " + dims(m.rows(), m.cols()) + ", expected " + dims(r, c)});
    }
  };
  shape(d.gamma_minus, d.e_minus, d.e_zero, "gamma_minus");
  shape(d.delta_minus, d.e_zero, d.e_minus, "delta_minus");
  shape(d.gamma_plus, d.e_plus, d.e_zero, "gamma_plus");
  shape(d.delta_plus, d.e_zero, d.e_plus, "delta_plus");
  if (!out.empty()) return out;

  if (d.gamma_minus * d.delta_minus != RatMatrix::identity(d.e_minus)) {
    out.push_back({"retraction", 0, "gamma_minus delta_minus != Id"});
  }
  if (d.gamma_plus * d.delta_plus != RatMatrix::identity(d.e_plus)) {
    out.push_back({"retraction", 0, "gamma_plus delta_plus != Id"});
  }
  if (!is_invertible(d.gamma_minus * d.delta_plus)) {
    out.push_back({"cross_not_invertible", 0, "gamma_minus delta_plus is not invertible"});
  }
  if (!is_invertible(d.gamma_plus * d.delta_minus)) {
    out.push_back({"cross_not_invertible", 0, "gamma_plus delta_minus is not invertible"});
  }
  return out;
}

void require_valid(const SymDiagram& d) {
  const auto violations = validate_pair(d);
  if (!violations.empty()) throw Error(ErrorKind::InvalidInput, "invalid diagram: " + violations.front().detail);
}

Projectors projectors(const SymDiagram& d) {
  return {d.delta_minus * d.gamma_minus, d.delta_plus * d.gamma_plus};
}

PervQuiver pair_to_quiver(const SymDiagram& d) {
  require_valid(d);
  const RatMatrix basis = kernel_basis(d.gamma_plus);
  return PervQuiver::from_maps(d.e_minus, {s_map(d, basis)}, {d.gamma_minus * basis});
}

SymDiagram quiver_to_pair(const PervQuiver& q) {
  if (q.n != 1) throw Error(ErrorKind::InvalidInput, "quiver_to_pair needs exactly one marked point");
  require_valid(q);
  const std::size_t psi = q.psi_dim;
  const std::size_t phi = q.phi_dims[0];
  const RatMatrix id = RatMatrix::identity(psi);
  SymDiagram d;
  d.e_minus = psi;
  d.e_plus = psi;
  d.e_zero = phi + psi;
  d.delta_minus = vstack(RatMatrix(phi, psi), id);
  d.gamma_minus = hstack(q.v[0], id);
  d.delta_plus = vstack(-q.u[0], id);
  d.gamma_plus = hstack(RatMatrix(psi, phi), id);
  return d;
}

SphericalQuadruple spherical_quadruple(const SymDiagram& d) {
  require_valid(d);
  const RatMatrix basis = kernel_basis(d.gamma_plus);
  SphericalQuadruple sq;
  sq.s = s_map(d, basis);
  sq.r = d.gamma_minus * basis;
  sq.t1 = RatMatrix::identity(sq.s.rows()) - sq.s * sq.r;
  sq.t0 = RatMatrix::identity(sq.r.rows()) - sq.r * sq.s;
  return sq;
}

bool twist_identities_check(const SymDiagram& d) {
  const SphericalQuadruple sq = spherical_quadruple(d);
  const RatMatrix basis = kernel_basis(d.gamma_plus);
  const auto [p_minus, p_plus] = projectors(d);
  const RatMatrix id0 = RatMatrix::identity(d.e_zero);

  const bool t0_ok = sq.t0 == d.gamma_minus * d.delta_plus * d.gamma_plus * d.delta_minus;
  const RatMatrix restricted = solve_in_basis(basis, (id0 - p_plus) * (id0 - p_minus) * basis);
  const bool t1_ok = sq.t1 == restricted;
  return t0_ok && t1_ok;
}

SymDiagram base_change(const SymDiagram& d, const RatMatrix& g0, const RatMatrix& gm, const RatMatrix& gp) {
  if (!has_shape(g0, d.e_zero, d.e_zero) || !has_shape(gm, d.e_minus, d.e_minus) ||
      !has_shape(gp, d.e_plus, d.e_plus)) {
    throw Error(ErrorKind::InvalidInput, "base change shapes do not match the diagram");
  }
  if (!is_invertible(g0) || !is_invertible(gm) || !is_invertible(gp)) {
    throw Error(ErrorKind::InvalidInput, "base change must be invertible");
  }
  const RatMatrix g0_inv = inverse(g0);
  SymDiagram out = d;
  out.gamma_minus = gm * d.gamma_minus * g0_inv;
  out.delta_minus = g0 * d.delta_minus * inverse(gm);
  out.gamma_plus = gp * d.gamma_plus * g0_inv;
  out.delta_plus = g0 * d.delta_plus * inverse(gp);
  return out;
}

}  // namespace schober
