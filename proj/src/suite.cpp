#include "schober/suite.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "schober/plcalc.hpp"
#include "schober/random.hpp"

namespace schober {

namespace {

QuiverGen gen_n(Rng& rng, std::size_t lo, std::size_t hi) {
  return {static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi))), 3, 1, 3};
}

std::vector<Property> make_properties() {
  std::vector<Property> ps;

  ps.push_back({"exactlin.inverse", [](Rng& rng) {
                  const auto n = static_cast<std::size_t>(rng.uniform(0, 6));
                  const RatMatrix a = random_invertible(rng, n, 5);
                  return a * inverse(a) == RatMatrix::identity(n);
                }});
  ps.push_back({"exactlin.rank_nullity", [](Rng& rng) {
                  const RatMatrix a = random_matrix(rng, static_cast<std::size_t>(rng.uniform(0, 5)),
                                                    static_cast<std::size_t>(rng.uniform(0, 5)), 1);
                  const RatMatrix k = kernel_basis(a);
                  return (a * k).is_zero() && rank(a) + k.cols() == a.cols();
                }});

  ps.push_back({"quiver.twist_phi_inverse", [](Rng& rng) {
                  const auto psi = static_cast<std::size_t>(rng.uniform(0, 3));
                  const auto phi = static_cast<std::size_t>(rng.uniform(0, 3));
                  const PervQuiver q = PervQuiver::from_maps(psi, {random_matrix(rng, phi, psi, 1)},
                                                             {random_matrix(rng, psi, phi, 1)});
                  const bool psi_inv = is_invertible(twist_psi(q, 1));
                  if (psi_inv != is_invertible(twist_phi(q, 1))) return false;
                  return !psi_inv || twist_phi(q, 1) * twist_phi_inverse(q, 1) == RatMatrix::identity(phi);
                }});
  ps.push_back({"quiver.dual", [](Rng& rng) {
                  const PervQuiver q = random_quiver(rng, gen_n(rng, 0, 4));
                  const PervQuiver d = verdier_dual(q);
                  for (std::size_t i = 1; i <= q.n; ++i)
                    if (twist_psi(d, i) != twist_psi(q, i).transpose()) return false;
                  return is_valid(d) && verdier_dual(d) == q;
                }});
  ps.push_back({"quiver.direct_sum", [](Rng& rng) {
                  const QuiverGen g = gen_n(rng, 0, 3);
                  const PervQuiver a = random_quiver(rng, g);
                  const PervQuiver b = random_quiver(rng, g);
                  const PervQuiver s = direct_sum(a, b);
                  for (std::size_t i = 1; i <= a.n; ++i)
                    if (twist_psi(s, i) != block_diag(twist_psi(a, i), twist_psi(b, i))) return false;
                  return is_valid(s);
                }});
  ps.push_back({"quiver.hom_space", [](Rng& rng) {
                  const QuiverGen g{static_cast<std::size_t>(rng.uniform(0, 2)), 2, 0, 2};
                  const PervQuiver a = random_quiver(rng, g);
                  const PervQuiver b = random_quiver(rng, g);
                  for (const auto& f : hom_space(a, b))
                    if (!is_morphism(f)) return false;
                  return true;
                }});

  ps.push_back({"braid.relations", [](Rng& rng) {
                  const PervQuiver q = random_quiver(rng, gen_n(rng, 3, 5));
                  const int i = static_cast<int>(rng.uniform(1, static_cast<std::int64_t>(q.n) - 2));
                  return act(q, {q.n, {i, i + 1, i}}) == act(q, {q.n, {i + 1, i, i + 1}});
                }});
  ps.push_back({"braid.distant_commutation", [](Rng& rng) {
                  const PervQuiver q = random_quiver(rng, gen_n(rng, 4, 5));
                  const int i = static_cast<int>(rng.uniform(1, static_cast<std::int64_t>(q.n) - 3));
                  const int j = static_cast<int>(rng.uniform(i + 2, static_cast<std::int64_t>(q.n) - 1));
                  return act(q, {q.n, {i, j}}) == act(q, {q.n, {j, i}});
                }});
  ps.push_back({"braid.group_action", [](Rng& rng) {
                  const PervQuiver q = random_quiver(rng, gen_n(rng, 2, 4));
                  const BraidWord w = random_word(rng, q.n, 6);
                  const BraidWord w2 = random_word(rng, q.n, 6);
                  return act(q, w * w2) == act(act(q, w), w2) && act(q, w * w.inverse()) == q;
                }});
  ps.push_back({"braid.shadow", [](Rng& rng) {
                  const PervQuiver q = random_quiver(rng, gen_n(rng, 2, 5));
                  const auto i = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(q.n) - 1));
                  return shadow_act_gen(q, i) == act_gen(q, i).v;
                }});
  ps.push_back({"braid.hurwitz", [](Rng& rng) {
                  const PervQuiver q = random_quiver(rng, gen_n(rng, 2, 5));
                  const BraidWord w = random_word(rng, q.n, 6);
                  return local_monodromies(act(q, w)) == hurwitz_act(local_monodromies(q), w);
                }});
  ps.push_back({"braid.conservation", [](Rng& rng) {
                  const PervQuiver q = random_quiver(rng, gen_n(rng, 2, 5));
                  const PervQuiver moved = act(q, random_word(rng, q.n, 6));
                  auto dims = q.phi_dims;
                  auto moved_dims = moved.phi_dims;
                  std::sort(dims.begin(), dims.end());
                  std::sort(moved_dims.begin(), moved_dims.end());
                  Rat det = 1, moved_det = 1;
                  for (const auto& t : local_monodromies(q)) det *= determinant(t);
                  for (const auto& t : local_monodromies(moved)) moved_det *= determinant(t);
                  return total_monodromy(moved) == total_monodromy(q) && moved.psi_dim == q.psi_dim &&
                         dims == moved_dims && det == moved_det && is_valid(moved);
                }});

  ps.push_back({"plcalc.identity", [](Rng& rng) {
                  QuiverGen g = gen_n(rng, 3, 5);
                  g.min_psi = 0;
                  const PervQuiver q = random_quiver(rng, g);
                  std::vector<std::size_t> idx(q.n);
                  std::iota(idx.begin(), idx.end(), 1);
                  for (std::size_t t = 0; t < 3; ++t) {
                    std::swap(idx[t], idx[static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(t),
                                                                          static_cast<std::int64_t>(q.n) - 1))]);
                  }
                  return pl_check(q, idx[0], idx[1], idx[2], random_word(rng, q.n, 6));
                }});
  ps.push_back({"plcalc.equivariance", [](Rng& rng) {
                  const PervQuiver q = random_quiver(rng, gen_n(rng, 2, 4));
                  const BraidWord w = random_word(rng, q.n, 4);
                  const BraidWord w2 = random_word(rng, q.n, 4);
                  const ArcSpec whole{w * w2, 1, 2, std::nullopt};
                  const ArcSpec rest{w2, 1, 2, std::nullopt};
                  return transition(q, whole) == transition(act(q, w), rest);
                }});
  ps.push_back({"plcalc.vanishing_total", [](Rng& rng) {
                  const PervQuiver q = random_quiver(rng, gen_n(rng, 1, 5));
                  return vanishing_total(act(q, random_word(rng, q.n, 6))) == vanishing_total(q);
                }});

  ps.push_back({"sympair.roundtrip", [](Rng& rng) {
                  const PervQuiver q = random_quiver(rng, {1, 3, 0, 3});
                  const SymDiagram d = quiver_to_pair(q);
                  return validate_pair(d).empty() && pair_to_quiver(d) == q;
                }});
  ps.push_back({"sympair.twist_identities", [](Rng& rng) { return twist_identities_check(random_pair(rng, 3)); }});
  ps.push_back({"sympair.projectors", [](Rng& rng) {
                  const auto [pm, pp] = projectors(random_pair(rng, 3));
                  return pm * pm == pm && pp * pp == pp;
                }});
  ps.push_back({"sympair.rank_nullity", [](Rng& rng) {
                  const SymDiagram d = random_pair(rng, 3);
                  return d.e_zero == kernel_basis(d.gamma_plus).cols() + d.e_plus &&
                         d.e_zero == kernel_basis(d.gamma_minus).cols() + d.e_minus;
                }});
  ps.push_back({"sympair.base_change_iso", [](Rng& rng) {
                  const SymDiagram d = random_pair(rng, 2);
                  const SymDiagram e = base_change(d, random_invertible(rng, d.e_zero), random_invertible(rng, d.e_minus),
                                                   random_invertible(rng, d.e_plus));
                  return is_isomorphic(pair_to_quiver(d), pair_to_quiver(e), 16, rng.next()).verdict ==
                         IsoVerdict::Yes;
                }});

  ps.push_back({"cube.product_valid", [](Rng& rng) {
                  return is_valid(random_cube(rng, static_cast<std::size_t>(rng.uniform(1, 3)), 2));
                }});
  ps.push_back({"cube.path_independence", [](Rng& rng) {
                  const DoubleCube c = random_cube(rng, static_cast<std::size_t>(rng.uniform(1, 3)), 2);
                  const auto full = static_cast<std::int64_t>((Subset{1} << c.r) - 1);
                  const auto to = static_cast<Subset>(rng.uniform(0, full));
                  const auto from = to & static_cast<Subset>(rng.uniform(0, full));
                  return composite(c, Family::Gamma, from, to) == composite_reversed(c, Family::Gamma, from, to) &&
                         composite(c, Family::Delta, from, to) == composite_reversed(c, Family::Delta, from, to);
                }});
  ps.push_back({"cube.dual", [](Rng& rng) {
                  const DoubleCube c = random_cube(rng, static_cast<std::size_t>(rng.uniform(1, 3)), 2);
                  const DoubleCube d = dual_cube(c);
                  return is_valid(d) && dual_cube(d) == c;
                }});
  return ps;
}

}  // namespace

const std::vector<Property>& builtin_properties() {
  static const std::vector<Property> properties = make_properties();
  return properties;
}

std::size_t SuiteReport::total_failed() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.failed;
  return n;
}

SuiteReport run_suite(const std::vector<Property>& properties, std::size_t trials, std::uint64_t seed) {
  std::vector<std::future<PropertyResult>> jobs;
  for (std::size_t p = 0; p < properties.size(); ++p) {
    jobs.push_back(std::async(std::launch::async, [&, p] {
      PropertyResult res{properties[p].name, 0, 0};
      const std::uint64_t property_seed = mix_seed(seed, p);
      for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(mix_seed(property_seed, t));
        bool ok = false;
        try {
          ok = properties[p].check(rng);
        } catch (const std::exception&) {
          ok = false;
        }
        ++(ok ? res.passed : res.failed);
      }
      return res;
    }));
  }
  SuiteReport report;
  for (auto& j : jobs) report.results.push_back(j.get());
  return report;
}

}  // namespace schober
