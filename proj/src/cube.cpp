#include "schober/cube.hpp"

#include <algorithm>

namespace schober {

namespace {

Subset bit(std::size_t a) { return Subset{1} << (a - 1); }

std::size_t set_count(const DoubleCube& c) { return std::size_t{1} << c.r; }

const RatMatrix& edge_map(const DoubleCube& c, Family f, Subset from_set, std::size_t a) {
  const auto& family = f == Family::Gamma ? c.gamma : c.delta;
  const auto it = family.find({from_set, a});
  if (it == family.end()) {
    throw Error(ErrorKind::InvalidInput, "missing edge " + subset_label(from_set) + " +" + std::to_string(a));
  }
  return it->second;
}

void require_valid(const DoubleCube& c) {
  const auto violations = validate_cube(c);
  if (!violations.empty()) throw Error(ErrorKind::InvalidInput, "invalid cube: " + violations.front().detail);
}

void check_sets(const DoubleCube& c, Subset from_set, Subset to_set) {
  if (to_set >= set_count(c) || from_set >= set_count(c)) throw Error(ErrorKind::InvalidInput, "subset out of range");
  if ((from_set & ~to_set) != 0) {
    throw Error(ErrorKind::InvalidInput, subset_label(from_set) + " is not contained in " + subset_label(to_set));
  }
}

RatMatrix chain(const DoubleCube& c, Family family, Subset from_set, Subset to_set, bool increasing) {
  require_valid(c);
  check_sets(c, from_set, to_set);
  std::vector<std::size_t> order = elements(to_set & ~from_set);
  if (!increasing) std::reverse(order.begin(), order.end());
  RatMatrix out = RatMatrix::identity(c.dims[from_set]);
  Subset cur = from_set;
  for (auto a : order) {
    const RatMatrix& m = edge_map(c, family, cur, a);
    // gamma composes forward, delta composes back toward from_set.
    out = family == Family::Gamma ? m * out : out * m;
    cur |= bit(a);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> elements(Subset s) {
  std::vector<std::size_t> out;
  for (std::size_t a = 1; s != 0; ++a, s >>= 1) {
    if (s & 1U) out.push_back(a);
  }
  return out;
}

Subset subset_of(const std::vector<std::size_t>& elems, std::size_t r) {
  Subset s = 0;
  std::size_t prev = 0;
  for (auto a : elems) {
    if (a <= prev || a > r) {
      throw Error(ErrorKind::InvalidInput, "subset elements must be strictly increasing within 1.." + std::to_string(r));
    }
    s |= bit(a);
    prev = a;
  }
  return s;
}

std::string subset_label(Subset s) {
  std::string out = "[";
  bool first = true;
  for (auto a : elements(s)) {
    out += (first ? "" : ",") + std::to_string(a);
    first = false;
  }
  return out + "]";
}

std::vector<CubeEdge> DoubleCube::edges() const {
  std::vector<CubeEdge> out;
  for (Subset s = 0; s < (Subset{1} << r); ++s)
    for (std::size_t a = 1; a <= r; ++a)
      if (!(s & bit(a))) out.push_back({s, a});
  return out;
}

std::vector<CubeViolation> validate_cube(const DoubleCube& c) {
  std::vector<CubeViolation> out;
  if (c.r > kMaxCubeRank) {
    out.push_back({"shape", Family::Gamma, 0, 0, 0, "rank " + std::to_string(c.r) + " too large"});
    return out;
  }
  if (c.dims.size() != set_count(c)) {
    out.push_back({"shape", Family::Gamma, 0, 0, 0, "need 2^r dimensions"});
    return out;
  }
  bool shapes_ok = true;
  for (const auto& e : c.edges()) {
    const std::size_t lo = c.dims[e.from_set];
    const std::size_t hi = c.dims[e.from_set | bit(e.elem)];
    for (auto f : {Family::Gamma, Family::Delta}) {
      const auto& family = f == Family::Gamma ? c.gamma : c.delta;
      const auto it = family.find(e);
      const char* name = f == Family::Gamma ? "gamma" : "delta";
      const std::string where = std::string(name) + " " + subset_label(e.from_set) + " +" + std::to_string(e.elem);
      if (it == family.end()) {
        out.push_back({"missing_edge", f, e.from_set, e.elem, 0, where + " missing"});
        shapes_ok = false;
        continue;
      }
      const auto [rows, cols] = f == Family::Gamma ? std::pair{hi, lo} : std::pair{lo, hi};
      if (it->second.rows() != rows || it->second.cols() != cols) {
        out.push_back({"shape", f, e.from_set, e.elem, 0, where + " has wrong shape"});
        shapes_ok = false;
      }
    }
  }
  if (c.gamma.size() + c.delta.size() != 2 * c.edges().size()) {
    out.push_back({"shape", Family::Gamma, 0, 0, 0, "edge maps outside the cube"});
    shapes_ok = false;
  }
  if (!shapes_ok) return out;

  for (Subset s = 0; s < set_count(c); ++s) {
    for (std::size_t a = 1; a <= c.r; ++a) {
      if (s & bit(a)) continue;
      for (std::size_t b = a + 1; b <= c.r; ++b) {
        if (s & bit(b)) continue;
        const Subset sa = s | bit(a);
        const Subset sb = s | bit(b);
        const std::string face = subset_label(s) + " +" + std::to_string(a) + " +" + std::to_string(b);
        // gamma: E_s -> E_{s+a+b} along both routes
        if (c.gamma.at({sa, b}) * c.gamma.at({s, a}) != c.gamma.at({sb, a}) * c.gamma.at({s, b})) {
          out.push_back({"face", Family::Gamma, s, a, b, "gamma face " + face + " does not commute"});
        }
        // delta: E_{s+a+b} -> E_s
        if (c.delta.at({s, a}) * c.delta.at({sa, b}) != c.delta.at({s, b}) * c.delta.at({sb, a})) {
          out.push_back({"face", Family::Delta, s, a, b, "delta face " + face + " does not commute"});
        }
      }
    }
  }
  return out;
}

RatMatrix composite(const DoubleCube& c, Family family, Subset from_set, Subset to_set) {
  return chain(c, family, from_set, to_set, true);
}

RatMatrix composite_reversed(const DoubleCube& c, Family family, Subset from_set, Subset to_set) {
  return chain(c, family, from_set, to_set, false);
}

DoubleCube dual_cube(const DoubleCube& c) {
  require_valid(c);
  DoubleCube d = c;
  for (auto& [e, m] : d.gamma) m = c.delta.at(e).transpose();
  for (auto& [e, m] : d.delta) m = c.gamma.at(e).transpose();
  return d;
}

std::pair<RatMatrix, RatMatrix> edge_pair(const DoubleCube& c, Subset from_set, std::size_t a) {
  require_valid(c);
  if (a < 1 || a > c.r || from_set >= set_count(c) || (from_set & bit(a))) {
    throw Error(ErrorKind::InvalidInput, "no edge " + subset_label(from_set) + " +" + std::to_string(a));
  }
  return {c.gamma.at({from_set, a}), c.delta.at({from_set, a})};
}

DoubleCube product_cube(const std::vector<EdgeFactor>& factors) {
  if (factors.size() > kMaxCubeRank) throw Error(ErrorKind::InvalidInput, "too many factors");
  DoubleCube c;
  c.r = factors.size();
  auto side_dim = [&](std::size_t a, bool upper) {
    return upper ? factors[a - 1].gamma.rows() : factors[a - 1].gamma.cols();
  };
  for (const auto& f : factors) {
    if (f.delta.rows() != f.gamma.cols() || f.delta.cols() != f.gamma.rows()) {
      throw Error(ErrorKind::DimensionMismatch, "factor gamma and delta shapes are not transposed");
    }
  }
  c.dims.resize(set_count(c));
  for (Subset s = 0; s < set_count(c); ++s) {
    std::size_t d = 1;
    for (std::size_t a = 1; a <= c.r; ++a) d *= side_dim(a, (s & bit(a)) != 0);
    c.dims[s] = d;
  }
  for (const auto& e : c.edges()) {
    RatMatrix g = RatMatrix::identity(1);
    RatMatrix dl = RatMatrix::identity(1);
    for (std::size_t b = 1; b <= c.r; ++b) {
      if (b == e.elem) {
        g = kron(g, factors[b - 1].gamma);
        dl = kron(dl, factors[b - 1].delta);
      } else {
        const RatMatrix id = RatMatrix::identity(side_dim(b, (e.from_set & bit(b)) != 0));
        g = kron(g, id);
        dl = kron(dl, id);
      }
    }
    c.gamma.emplace(e, std::move(g));
    c.delta.emplace(e, std::move(dl));
  }
  return c;
}

}  // namespace schober
