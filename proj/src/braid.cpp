#include "schober/braid.hpp"

#include <cassert>
#include <cctype>
#include <cstdlib>
#include <string>

namespace schober {

namespace {

void check_generator(const PervQuiver& q, std::size_t i) {
  if (i < 1 || i + 1 > q.n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "generator s_" + std::to_string(i) + " needs 1 <= i <= " + std::to_string(q.n) + " - 1");
  }
}

// s_i as in the header, without validation. Index i is 1-based.
PervQuiver step(const PervQuiver& q, std::size_t i) {
  const std::size_t a = i - 1;
  const std::size_t b = i;
  const RatMatrix t = twist_psi(q, i + 1);
  PervQuiver out = q;
  out.phi_dims[a] = q.phi_dims[b];
  out.phi_dims[b] = q.phi_dims[a];
  out.u[a] = q.u[b];
  out.v[a] = q.v[b];
  out.u[b] = q.u[a] * t;
  out.v[b] = inverse(t) * q.v[a];
  return out;
}

// Inverse of step: with primes on the input,
// u_i = u'_{i+1} T'_i^{-1}, v_i = T'_i v'_{i+1}, u_{i+1} = u'_i, v_{i+1} = v'_i.
PervQuiver step_inv(const PervQuiver& q, std::size_t i) {
  const std::size_t a = i - 1;
  const std::size_t b = i;
  const RatMatrix t = twist_psi(q, i);
  PervQuiver out = q;
  out.phi_dims[a] = q.phi_dims[b];
  out.phi_dims[b] = q.phi_dims[a];
  out.u[a] = q.u[b] * inverse(t);
  out.v[a] = t * q.v[b];
  out.u[b] = q.u[a];
  out.v[b] = q.v[a];
  return out;
}

void check_square_invertible(const std::vector<RatMatrix>& ts) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!ts[i].is_square() || ts[i].rows() != ts.front().rows()) {
      throw Error(ErrorKind::InvalidInput, "monodromy " + std::to_string(i + 1) + " has the wrong shape");
    }
    if (!is_invertible(ts[i])) {
      throw Error(ErrorKind::InvalidInput, "monodromy " + std::to_string(i + 1) + " is not invertible");
    }
  }
}

}  // namespace

void BraidWord::check() const {
  for (int k : letters) {
    if (k == 0 || static_cast<std::size_t>(std::abs(k)) + 1 > n) {
      throw Error(ErrorKind::InvalidInput,
                  "letter " + std::to_string(k) + " out of range for " + std::to_string(n) + " strands");
    }
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord inv{n, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) inv.letters.push_back(-*it);
  return inv;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw Error(ErrorKind::ArityMismatch, "concatenating words on different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord parse_word(std::size_t n, std::string_view text) {
  BraidWord w{n, {}};
  std::string token;
  auto flush = [&](bool final) {
    std::size_t b = 0, e = token.size();
    while (b < e && std::isspace(static_cast<unsigned char>(token[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1]))) --e;
    const std::string t = token.substr(b, e - b);
    token.clear();
    if (t.empty()) {
      if (final && w.letters.empty()) return;
      throw Error(ErrorKind::Parse, "empty letter in braid word \"" + std::string(text) + "\"");
    }
    std::size_t pos = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (pos == t.size()) throw Error(ErrorKind::Parse, "bad letter \"" + t + "\"");
    for (std::size_t k = pos; k < t.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw Error(ErrorKind::Parse, "bad letter \"" + t + "\"");
    }
    if (t.size() - pos > 9) throw Error(ErrorKind::Parse, "letter \"" + t + "\" too large");
    w.letters.push_back(std::stoi(t));
  };
  for (char c : text) {
    if (c == ',') {
      flush(false);
    } else {
      token.push_back(c);
    }
  }
  flush(true);
  w.check();
  return w;
}

BraidWord reduce(const BraidWord& w) {
  BraidWord out{w.n, {}};
  for (int k : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -k) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(k);
    }
  }
  return out;
}

PervQuiver act_gen(const PervQuiver& q, std::size_t i) {
  check_generator(q, i);
  require_valid(q);
  return step(q, i);
}

PervQuiver act_gen_inv(const PervQuiver& q, std::size_t i) {
  check_generator(q, i);
  require_valid(q);
  return step_inv(q, i);
}

PervQuiver act(const PervQuiver& q, const BraidWord& w) {
  if (w.n != q.n) {
    throw Error(ErrorKind::ArityMismatch,
                "word on " + std::to_string(w.n) + " strands applied to quiver with " + std::to_string(q.n) +
                    " points");
  }
  w.check();
  require_valid(q);
  PervQuiver cur = q;
  for (int k : w.letters) {
    const auto i = static_cast<std::size_t>(std::abs(k));
    cur = k > 0 ? step(cur, i) : step_inv(cur, i);
    assert(is_valid(cur));
  }
  return cur;
}

std::vector<RatMatrix> shadow_act_gen(const PervQuiver& q, std::size_t i) {
  check_generator(q, i);
  require_valid(q);
  std::vector<RatMatrix> s = q.v;
  const auto& r_next = q.u[i];
  const RatMatrix t_next = RatMatrix::identity(q.psi_dim) - s[i] * r_next;
  s[i - 1] = q.v[i];
  s[i] = inverse(t_next) * q.v[i - 1];
  return s;
}

std::vector<RatMatrix> local_monodromies(const PervQuiver& q) {
  std::vector<RatMatrix> ts;
  ts.reserve(q.n);
  for (std::size_t i = 1; i <= q.n; ++i) ts.push_back(twist_psi(q, i));
  return ts;
}

RatMatrix total_monodromy(const PervQuiver& q) {
  RatMatrix total = RatMatrix::identity(q.psi_dim);
  for (std::size_t i = 1; i <= q.n; ++i) total = total * twist_psi(q, i);
  return total;
}

std::vector<RatMatrix> hurwitz_act(std::vector<RatMatrix> ts, const BraidWord& w) {
  if (w.n != ts.size()) {
    throw Error(ErrorKind::ArityMismatch,
                "word on " + std::to_string(w.n) + " strands applied to " + std::to_string(ts.size()) + " matrices");
  }
  w.check();
  check_square_invertible(ts);
  for (int k : w.letters) {
    const auto a = static_cast<std::size_t>(std::abs(k)) - 1;
    const auto b = a + 1;
    if (k > 0) {
      RatMatrix moved = inverse(ts[b]) * ts[a] * ts[b];
      ts[a] = ts[b];
      ts[b] = std::move(moved);
    } else {
      RatMatrix moved = ts[a] * ts[b] * inverse(ts[a]);
      ts[b] = ts[a];
      ts[a] = std::move(moved);
    }
  }
  return ts;
}

}  // namespace schober
