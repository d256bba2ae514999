#include "schober/random.hpp"

#include <algorithm>

namespace schober {

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rat(static_cast<long>(rng.uniform(-bound, bound)));
  return m;
}

RatMatrix random_invertible(Rng& rng, std::size_t size, std::int64_t bound) {
  for (;;) {
    RatMatrix m = random_matrix(rng, size, size, bound);
    if (is_invertible(m)) return m;
  }
}

PervQuiver random_quiver(Rng& rng, const QuiverGen& gen) {
  PervQuiver q;
  q.n = gen.n;
  q.psi_dim = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(std::min(gen.min_psi, gen.max_dim)),
                                                   static_cast<std::int64_t>(gen.max_dim)));
  for (std::size_t i = 0; i < gen.n; ++i) {
    q.phi_dims.push_back(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(gen.max_dim))));
  }
  q.u.resize(gen.n);
  q.v.resize(gen.n);
  for (std::size_t i = 0; i < gen.n; ++i) {
    do {
      q.u[i] = random_matrix(rng, q.phi_dims[i], q.psi_dim, gen.bound);
      q.v[i] = random_matrix(rng, q.psi_dim, q.phi_dims[i], gen.bound);
    } while (!is_invertible(twist_psi(q, i + 1)));
  }
  return q;
}

BraidWord random_word(Rng& rng, std::size_t n, std::size_t max_len) {
  BraidWord w{n, {}};
  if (n < 2) return w;
  const auto len = rng.uniform(0, static_cast<std::int64_t>(max_len));
  for (std::int64_t t = 0; t < len; ++t) {
    const auto g = static_cast<int>(rng.uniform(1, static_cast<std::int64_t>(n) - 1));
    w.letters.push_back(rng.coin() ? g : -g);
  }
  return w;
}

SymDiagram random_pair(Rng& rng, std::size_t max_dim) {
  const PervQuiver q = random_quiver(rng, {1, max_dim, 0, 3});
  const SymDiagram d = quiver_to_pair(q);
  const RatMatrix g0 = random_invertible(rng, d.e_zero);
  const RatMatrix gm = random_invertible(rng, d.e_minus);
  const RatMatrix gp = random_invertible(rng, d.e_plus);
  return base_change(d, g0, gm, gp);
}

EdgeFactor random_factor(Rng& rng, std::size_t max_dim) {
  const auto hi = static_cast<std::int64_t>(std::max<std::size_t>(max_dim, 1));
  const auto lower = static_cast<std::size_t>(rng.uniform(1, hi));
  const auto upper = static_cast<std::size_t>(rng.uniform(1, hi));
  EdgeFactor f;
  do {
    f.gamma = random_matrix(rng, upper, lower);
  } while (f.gamma.is_zero());
  do {
    f.delta = random_matrix(rng, lower, upper);
  } while (f.delta.is_zero());
  return f;
}

DoubleCube random_cube(Rng& rng, std::size_t r, std::size_t max_dim) {
  std::vector<EdgeFactor> factors;
  for (std::size_t a = 0; a < r; ++a) factors.push_back(random_factor(rng, max_dim));
  return product_cube(factors);
}

}  // namespace schober
