#include "schober/plcalc.hpp"

#include <numeric>
#include <string>

namespace schober {

namespace {

void check_point(std::size_t p, std::size_t n, const char* role) {
  if (p < 1 || p > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                std::string(role) + " " + std::to_string(p) + " not in 1.." + std::to_string(n));
  }
}

}  // namespace

void ArcSpec::check(std::size_t n) const {
  check_point(i, n, "endpoint i");
  check_point(k, n, "endpoint k");
  if (i == k) throw Error(ErrorKind::InvalidInput, "arc endpoints coincide");
  if (detour) {
    check_point(*detour, n, "detour");
    if (*detour == i || *detour == k) throw Error(ErrorKind::InvalidInput, "detour point is an endpoint");
  }
}

RatMatrix transition(const PervQuiver& q, const ArcSpec& arc) {
  arc.check(q.n);
  const PervQuiver moved = act(q, arc.coords);
  const auto& u_k = moved.u[arc.k - 1];
  const auto& v_i = moved.v[arc.i - 1];
  if (!arc.detour) return u_k * v_i;
  return u_k * twist_psi(moved, *arc.detour) * v_i;
}

PlTriangle pl_triangle_k0(const PervQuiver& q, std::size_t i, std::size_t j, std::size_t k, const BraidWord& coords) {
  ArcSpec direct{coords, i, k, std::nullopt};
  ArcSpec around{coords, i, k, j};
  around.check(q.n);
  PlTriangle tri;
  tri.m_gamma = transition(q, around);
  tri.m_gamma_prime = transition(q, direct);
  tri.composite = transition(q, {coords, j, k, std::nullopt}) * transition(q, {coords, i, j, std::nullopt});
  tri.additive = tri.m_gamma_prime == tri.m_gamma + tri.composite;
  return tri;
}

bool pl_check(const PervQuiver& q, std::size_t i, std::size_t j, std::size_t k, const BraidWord& coords) {
  return pl_triangle_k0(q, i, j, k, coords).additive;
}

std::size_t vanishing_total(const PervQuiver& q) {
  return std::accumulate(q.phi_dims.begin(), q.phi_dims.end(), std::size_t{0});
}

}  // namespace schober
