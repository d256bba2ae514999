#include "schober/quiver.hpp"

#include <algorithm>

#include "schober/rng.hpp"

namespace schober {

namespace {

std::string shape(const RatMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void check_index(const PervQuiver& q, std::size_t i) {
  if (i < 1 || i > q.n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "marked point " + std::to_string(i) + " not in 1.." + std::to_string(q.n));
  }
}

bool same_dims(const PervQuiver& a, const PervQuiver& b) {
  return a.n == b.n && a.psi_dim == b.psi_dim && a.phi_dims == b.phi_dims;
}

std::size_t total_unknowns(const PervQuiver& a, const PervQuiver& b) {
  std::size_t count = b.psi_dim * a.psi_dim;
  for (std::size_t i = 0; i < a.n; ++i) count += b.phi_dims[i] * a.phi_dims[i];
  return count;
}

}  // namespace

PervQuiver PervQuiver::from_maps(std::size_t psi_dim, std::vector<RatMatrix> u, std::vector<RatMatrix> v) {
  PervQuiver q;
  q.n = u.size();
  q.psi_dim = psi_dim;
  for (const auto& ui : u) q.phi_dims.push_back(ui.rows());
  q.u = std::move(u);
  q.v = std::move(v);
  return q;
}

PervQuiver PervQuiver::zero(std::size_t n) {
  PervQuiver q;
  q.n = n;
  q.phi_dims.assign(n, 0);
  q.u.assign(n, RatMatrix{});
  q.v.assign(n, RatMatrix{});
  return q;
}

PervQuiver PervQuiver::constant_sheaf() { return from_maps(1, {RatMatrix(0, 1)}, {RatMatrix(1, 0)}); }

PervQuiver PervQuiver::skyscraper() { return from_maps(0, {RatMatrix(1, 0)}, {RatMatrix(0, 1)}); }

std::vector<Violation> validate(const PervQuiver& q) {
  std::vector<Violation> out;
  if (q.phi_dims.size() != q.n || q.u.size() != q.n || q.v.size() != q.n) {
    out.push_back({"shape", 0,
                   "expected " + std::to_string(q.n) + " entries in phi_dims, u and v; got " +
                       std::to_string(q.phi_dims.size()) + ", " + std::to_string(q.u.size()) + ", " +
                       std::to_string(q.v.size())});
    return out;
  }
  for (std::size_t i = 0; i < q.n; ++i) {
    const std::size_t idx = i + 1;
    const bool u_ok = q.u[i].rows() == q.phi_dims[i] && q.u[i].cols() == q.psi_dim;
    const bool v_ok = q.v[i].rows() == q.psi_dim && q.v[i].cols() == q.phi_dims[i];
    if (!u_ok) {
      out.push_back({"shape", idx,
                     "u has shape " + shape(q.u[i]) + ", expected " + std::to_string(q.phi_dims[i]) + "x" +
                         std::to_string(q.psi_dim)});
    }
    if (!v_ok) {
      out.push_back({"shape", idx,
                     "v has shape " + shape(q.v[i]) + ", expected " + std::to_string(q.psi_dim) + "x" +
                         std::to_string(q.phi_dims[i])});
    }
    if (u_ok && v_ok && !is_invertible(twist_psi(q, idx))) {
      out.push_back({"twist_not_invertible", idx, "Id - v u is singular"});
    }
  }
  return out;
}

void require_valid(const PervQuiver& q) {
  const auto violations = validate(q);
  if (!violations.empty()) {
    const auto& first = violations.front();
    throw Error(ErrorKind::InvalidInput,
                "invalid quiver at index " + std::to_string(first.index) + ": " + first.detail);
  }
}

RatMatrix twist_psi(const PervQuiver& q, std::size_t i) {
  check_index(q, i);
  return RatMatrix::identity(q.psi_dim) - q.v[i - 1] * q.u[i - 1];
}

RatMatrix twist_phi(const PervQuiver& q, std::size_t i) {
  check_index(q, i);
  return RatMatrix::identity(q.phi_dims[i - 1]) - q.u[i - 1] * q.v[i - 1];
}

RatMatrix twist_phi_inverse(const PervQuiver& q, std::size_t i) {
  check_index(q, i);
  const RatMatrix t_psi_inv = inverse(twist_psi(q, i));
  return RatMatrix::identity(q.phi_dims[i - 1]) + q.u[i - 1] * t_psi_inv * q.v[i - 1];
}

PervQuiver verdier_dual(const PervQuiver& q) {
  PervQuiver d = q;
  for (std::size_t i = 0; i < q.n; ++i) {
    d.u[i] = q.v[i].transpose();
    d.v[i] = q.u[i].transpose();
  }
  return d;
}

PervQuiver direct_sum(const PervQuiver& a, const PervQuiver& b) {
  if (a.n != b.n) {
    throw Error(ErrorKind::ArityMismatch,
                "direct sum of quivers with " + std::to_string(a.n) + " and " + std::to_string(b.n) + " points");
  }
  PervQuiver s;
  s.n = a.n;
  s.psi_dim = a.psi_dim + b.psi_dim;
  for (std::size_t i = 0; i < a.n; ++i) {
    s.phi_dims.push_back(a.phi_dims[i] + b.phi_dims[i]);
    s.u.push_back(block_diag(a.u[i], b.u[i]));
    s.v.push_back(block_diag(a.v[i], b.v[i]));
  }
  return s;
}

PervQuiver base_change(const PervQuiver& q, const RatMatrix& g_psi, const std::vector<RatMatrix>& g_phi) {
  if (g_phi.size() != q.n) {
    throw Error(ErrorKind::ArityMismatch, "need one Phi base change per marked point");
  }
  const RatMatrix g_psi_inv = inverse(g_psi);
  PervQuiver out = q;
  for (std::size_t i = 0; i < q.n; ++i) {
    out.u[i] = g_phi[i] * q.u[i] * g_psi_inv;
    out.v[i] = g_psi * q.v[i] * inverse(g_phi[i]);
  }
  return out;
}

bool is_morphism(const QuiverMorphism& f) {
  const auto& a = f.source;
  const auto& b = f.target;
  if (a.n != b.n || f.phi_maps.size() != a.n) return false;
  if (f.psi_map.rows() != b.psi_dim || f.psi_map.cols() != a.psi_dim) return false;
  for (std::size_t i = 0; i < a.n; ++i) {
    const auto& x = f.phi_maps[i];
    if (x.rows() != b.phi_dims[i] || x.cols() != a.phi_dims[i]) return false;
    if (b.u[i] * f.psi_map != x * a.u[i]) return false;
    if (b.v[i] * x != f.psi_map * a.v[i]) return false;
  }
  return true;
}

bool is_invertible(const QuiverMorphism& f) {
  return is_invertible(f.psi_map) &&
         std::all_of(f.phi_maps.begin(), f.phi_maps.end(), [](const RatMatrix& m) { return is_invertible(m); });
}

QuiverMorphism identity_morphism(const PervQuiver& q) {
  QuiverMorphism id{q, q, RatMatrix::identity(q.psi_dim), {}};
  for (auto d : q.phi_dims) id.phi_maps.push_back(RatMatrix::identity(d));
  return id;
}

std::vector<QuiverMorphism> hom_space(const PervQuiver& a, const PervQuiver& b) {
  if (a.n != b.n) {
    throw Error(ErrorKind::ArityMismatch,
                "hom between quivers with " + std::to_string(a.n) + " and " + std::to_string(b.n) + " points");
  }
  // Offsets of each unknown block in the flattened vector.
  std::vector<std::size_t> offset(a.n + 1);
  offset[0] = b.psi_dim * a.psi_dim;
  for (std::size_t i = 0; i < a.n; ++i) offset[i + 1] = offset[i] + b.phi_dims[i] * a.phi_dims[i];
  const std::size_t unknowns = total_unknowns(a, b);
  auto x_psi = [&](std::size_t r, std::size_t c) { return r * a.psi_dim + c; };
  auto x_phi = [&](std::size_t i, std::size_t r, std::size_t c) { return offset[i] + r * a.phi_dims[i] + c; };

  std::vector<std::vector<Rat>> eqs;
  for (std::size_t i = 0; i < a.n; ++i) {
    // b.u_i X_psi - X_phi_i a.u_i = 0, shape b.phi_i x a.psi
    for (std::size_t p = 0; p < b.phi_dims[i]; ++p)
      for (std::size_t q = 0; q < a.psi_dim; ++q) {
        std::vector<Rat> row(unknowns);
        for (std::size_t k = 0; k < b.psi_dim; ++k) row[x_psi(k, q)] += b.u[i](p, k);
        for (std::size_t l = 0; l < a.phi_dims[i]; ++l) row[x_phi(i, p, l)] -= a.u[i](l, q);
        eqs.push_back(std::move(row));
      }
    // b.v_i X_phi_i - X_psi a.v_i = 0, shape b.psi x a.phi_i
    for (std::size_t p = 0; p < b.psi_dim; ++p)
      for (std::size_t q = 0; q < a.phi_dims[i]; ++q) {
        std::vector<Rat> row(unknowns);
        for (std::size_t k = 0; k < b.phi_dims[i]; ++k) row[x_phi(i, k, q)] += b.v[i](p, k);
        for (std::size_t l = 0; l < a.psi_dim; ++l) row[x_psi(p, l)] -= a.v[i](l, q);
        eqs.push_back(std::move(row));
      }
  }
  RatMatrix system(eqs.size(), unknowns);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = eqs[r][c];
  const RatMatrix kernel = kernel_basis(system);

  std::vector<QuiverMorphism> basis;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    QuiverMorphism f{a, b, RatMatrix(b.psi_dim, a.psi_dim), {}};
    for (std::size_t r = 0; r < b.psi_dim; ++r)
      for (std::size_t c = 0; c < a.psi_dim; ++c) f.psi_map(r, c) = kernel(x_psi(r, c), k);
    for (std::size_t i = 0; i < a.n; ++i) {
      RatMatrix x(b.phi_dims[i], a.phi_dims[i]);
      for (std::size_t r = 0; r < b.phi_dims[i]; ++r)
        for (std::size_t c = 0; c < a.phi_dims[i]; ++c) x(r, c) = kernel(x_phi(i, r, c), k);
      f.phi_maps.push_back(std::move(x));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

IsoResult is_isomorphic(const PervQuiver& a, const PervQuiver& b, std::size_t trials, std::uint64_t seed) {
  if (!same_dims(a, b)) return {IsoVerdict::No, std::nullopt, "dimension vectors differ"};
  if (a == b) return {IsoVerdict::Yes, identity_morphism(a), "identical data"};

  const auto ab = hom_space(a, b);
  const std::size_t dim_ab = ab.size();
  const std::size_t dim_ba = hom_space(b, a).size();
  const std::size_t dim_aa = hom_space(a, a).size();
  const std::size_t dim_bb = hom_space(b, b).size();
  // An isomorphism identifies all four hom spaces.
  if (dim_ab != dim_ba || dim_ab != dim_aa || dim_aa != dim_bb) {
    return {IsoVerdict::No, std::nullopt, "hom dimensions differ"};
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    QuiverMorphism f{a, b, RatMatrix(b.psi_dim, a.psi_dim), {}};
    for (auto d : a.phi_dims) f.phi_maps.emplace_back(d, d);
    for (const auto& g : ab) {
      const Rat c(static_cast<long>(rng.uniform(-8, 8)));
      f.psi_map += c * g.psi_map;
      for (std::size_t i = 0; i < a.n; ++i) f.phi_maps[i] += c * g.phi_maps[i];
    }
    if (is_invertible(f)) return {IsoVerdict::Yes, std::move(f), "invertible morphism found"};
  }
  return {IsoVerdict::Unknown, std::nullopt, "no invertible sample in " + std::to_string(trials) + " trials"};
}

}  // namespace schober
