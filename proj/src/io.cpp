#include "schober/io.hpp"

#include <limits>

namespace schober {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) schema(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> counts_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of integers");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(count_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::string sub(const std::string& where, const std::string& key) { return where + "/" + key; }

Subset subset_from_label(const std::string& label, std::size_t r, const std::string& where) {
  Json parsed;
  try {
    parsed = Json::parse(label);
  } catch (const Json::parse_error&) {
    schema(where, "bad subset label \"" + label + "\"");
  }
  if (!parsed.is_array()) schema(where, "bad subset label \"" + label + "\"");
  std::vector<std::size_t> elems;
  for (const auto& e : parsed) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 1) schema(where, "bad subset label \"" + label + "\"");
    elems.push_back(e.get<std::size_t>());
  }
  try {
    return subset_of(elems, r);
  } catch (const Error& e) {
    schema(where, e.what());
  }
}

std::string edge_label(Subset from, Subset to) { return subset_label(from) + "->" + subset_label(to); }

}  // namespace

std::string_view to_string(Kind k) noexcept {
  switch (k) {
    case Kind::Quiver: return "quiver";
    case Kind::Pair: return "pair";
    case Kind::Cube: return "cube";
    case Kind::Braid: return "braid";
    case Kind::Arc: return "arc";
    case Kind::Matrices: return "matrices";
  }
  return "unknown";
}

Kind detect_kind(const Json& j) {
  if (j.is_array()) {
    if (!j.empty() && j.front().is_object()) return Kind::Matrices;
    return Kind::Braid;
  }
  if (j.is_object()) {
    if (j.contains("psi_dim")) return Kind::Quiver;
    if (j.contains("e_zero")) return Kind::Pair;
    if (j.contains("r") && j.contains("gamma")) return Kind::Cube;
    if (j.contains("coords")) return Kind::Arc;
  }
  throw Error(ErrorKind::Parse, "/: document is not a quiver, pair, cube, braid word, arc or matrix list");
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

Json to_json(const Rat& x) { return to_string(x); }

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const std::vector<RatMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

Json to_json(const PervQuiver& q) {
  return {{"n", q.n}, {"psi_dim", q.psi_dim}, {"phi_dims", q.phi_dims}, {"u", to_json(q.u)}, {"v", to_json(q.v)}};
}

Json to_json(const BraidWord& w) { return w.letters; }

Json to_json(const ArcSpec& a) {
  return {{"coords", to_json(a.coords)},
          {"i", a.i},
          {"k", a.k},
          {"detour", a.detour ? Json(*a.detour) : Json(nullptr)}};
}

Json to_json(const SymDiagram& d) {
  return {{"e_minus", d.e_minus},
          {"e_zero", d.e_zero},
          {"e_plus", d.e_plus},
          {"gamma_minus", to_json(d.gamma_minus)},
          {"delta_minus", to_json(d.delta_minus)},
          {"gamma_plus", to_json(d.gamma_plus)},
          {"delta_plus", to_json(d.delta_plus)}};
}

Json to_json(const DoubleCube& c) {
  Json dims = Json::object();
  for (Subset s = 0; s < c.dims.size(); ++s) dims[subset_label(s)] = c.dims[s];
  Json gamma = Json::object();
  for (const auto& [e, m] : c.gamma) gamma[edge_label(e.from_set, e.from_set | (Subset{1} << (e.elem - 1)))] = to_json(m);
  Json delta = Json::object();
  for (const auto& [e, m] : c.delta) delta[edge_label(e.from_set | (Subset{1} << (e.elem - 1)), e.from_set)] = to_json(m);
  return {{"r", c.r}, {"dims", std::move(dims)}, {"gamma", std::move(gamma)}, {"delta", std::move(delta)}};
}

Json to_json(const Violation& v) { return {{"kind", v.kind}, {"index", v.index}, {"detail", v.detail}}; }

Json to_json(const CubeViolation& v) {
  Json out = {{"kind", v.kind},
              {"family", v.family == Family::Gamma ? "gamma" : "delta"},
              {"base", elements(v.base)},
              {"a", v.a},
              {"detail", v.detail}};
  if (v.b != 0) out["b"] = v.b;
  return out;
}

Json to_json(const QuiverMorphism& f) { return {{"psi_map", to_json(f.psi_map)}, {"phi_maps", to_json(f.phi_maps)}}; }

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.dump(), 10);
  if (!j.is_string()) schema(where, "expected a rational string \"p/q\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    schema(where, e.what());
  }
}

RatMatrix matrix_from_json(const Json& j, const std::string& where) {
  const std::size_t rows = count_from_json(field(j, "rows", where), sub(where, "rows"));
  const std::size_t cols = count_from_json(field(j, "cols", where), sub(where, "cols"));
  const Json& entries = field(j, "entries", where);
  const std::string ew = sub(where, "entries");
  if (!entries.is_array() || entries.size() != rows) schema(ew, "expected " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rw = ew + "/" + std::to_string(r);
    if (!entries[r].is_array() || entries[r].size() != cols) schema(rw, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rat_from_json(entries[r][c], rw + "/" + std::to_string(c));
  }
  return m;
}

std::vector<RatMatrix> matrices_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of matrices");
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(matrix_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

PervQuiver quiver_from_json(const Json& j) {
  PervQuiver q;
  q.n = count_from_json(field(j, "n", ""), "/n");
  q.psi_dim = count_from_json(field(j, "psi_dim", ""), "/psi_dim");
  q.phi_dims = counts_from_json(field(j, "phi_dims", ""), "/phi_dims");
  q.u = matrices_from_json(field(j, "u", ""), "/u");
  q.v = matrices_from_json(field(j, "v", ""), "/v");
  return q;
}

BraidWord word_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) schema("", "expected an array of signed integers");
  BraidWord w{n, {}};
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) schema("/" + std::to_string(i), "expected a signed integer");
    const auto k = j[i].get<std::int64_t>();
    if (k == 0 || k > std::numeric_limits<int>::max() || k < -std::numeric_limits<int>::max()) {
      schema("/" + std::to_string(i), "letter out of range");
    }
    w.letters.push_back(static_cast<int>(k));
  }
  w.check();
  return w;
}

ArcSpec arc_from_json(const Json& j, std::size_t n) {
  ArcSpec a;
  a.coords = word_from_json(field(j, "coords", ""), n);
  a.i = count_from_json(field(j, "i", ""), "/i");
  a.k = count_from_json(field(j, "k", ""), "/k");
  if (j.contains("detour") && !j["detour"].is_null()) a.detour = count_from_json(j["detour"], "/detour");
  return a;
}

SymDiagram pair_from_json(const Json& j) {
  SymDiagram d;
  d.e_minus = count_from_json(field(j, "e_minus", ""), "/e_minus");
  d.e_zero = count_from_json(field(j, "e_zero", ""), "/e_zero");
  d.e_plus = count_from_json(field(j, "e_plus", ""), "/e_plus");
  d.gamma_minus = matrix_from_json(field(j, "gamma_minus", ""), "/gamma_minus");
  d.delta_minus = matrix_from_json(field(j, "delta_minus", ""), "/delta_minus");
  d.gamma_plus = matrix_from_json(field(j, "gamma_plus", ""), "/gamma_plus");
  d.delta_plus = matrix_from_json(field(j, "delta_plus", ""), "/delta_plus");
  return d;
}

DoubleCube cube_from_json(const Json& j) {
  DoubleCube c;
  c.r = count_from_json(field(j, "r", ""), "/r");
  if (c.r > kMaxCubeRank) schema("/r", "rank above " + std::to_string(kMaxCubeRank));
  const std::size_t sets = std::size_t{1} << c.r;
  c.dims.assign(sets, 0);
  std::vector<bool> seen(sets, false);
  const Json& dims = field(j, "dims", "");
  if (!dims.is_object()) schema("/dims", "expected an object keyed by subsets");
  for (const auto& [label, value] : dims.items()) {
    const Subset s = subset_from_label(label, c.r, "/dims/" + label);
    c.dims[s] = count_from_json(value, "/dims/" + label);
    seen[s] = true;
  }
  for (Subset s = 0; s < sets; ++s) {
    if (!seen[s]) schema("/dims", "no dimension for " + subset_label(s));
  }
  for (const char* name : {"gamma", "delta"}) {
    const bool is_gamma = std::string_view(name) == "gamma";
    const Json& family = field(j, name, "");
    const std::string fw = std::string("/") + name;
    if (!family.is_object()) schema(fw, "expected an object keyed by edges");
    for (const auto& [label, value] : family.items()) {
      const std::string ew = fw + "/" + label;
      const auto arrow = label.find("->");
      if (arrow == std::string::npos) schema(ew, "edge label must look like \"[..]->[..]\"");
      const Subset from = subset_from_label(label.substr(0, arrow), c.r, ew);
      const Subset to = subset_from_label(label.substr(arrow + 2), c.r, ew);
      const Subset small = is_gamma ? from : to;
      const Subset big = is_gamma ? to : from;
      const Subset diff = big & ~small;
      if ((small & ~big) != 0 || diff == 0 || (diff & (diff - 1)) != 0) {
        schema(ew, "edge must add exactly one element");
      }
      std::size_t a = 1;
      while (!(diff & (Subset{1} << (a - 1)))) ++a;
      (is_gamma ? c.gamma : c.delta).insert_or_assign(CubeEdge{small, a}, matrix_from_json(value, ew));
    }
  }
  return c;
}

}  // namespace schober
