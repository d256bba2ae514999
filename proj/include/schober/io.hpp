#pragma once

// JSON encodings of every object in the library.
//
//   rational  "p/q" string ("p" when q = 1); integers are also accepted
//   matrix    {"rows": r, "cols": c, "entries": [[...], ...]}
//   quiver    {"n", "psi_dim", "phi_dims", "u": [matrix], "v": [matrix]}
//   braid     [1, -2, 1]
//   arc       {"coords": [word], "i", "k", "detour": j | null}
//   pair      {"e_minus", "e_zero", "e_plus", "gamma_minus", "delta_minus",
//              "gamma_plus", "delta_plus"}
//   cube      {"r", "dims": {"[]": d, ...}, "gamma": {"[]->[1]": M, ...},
//              "delta": {"[1]->[]": M, ...}}
//
// Decoders throw Error(Parse) with a JSON-pointer-like location.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "schober/braid.hpp"
#include "schober/cube.hpp"
#include "schober/plcalc.hpp"
#include "schober/quiver.hpp"
#include "schober/sympair.hpp"

namespace schober {

using Json = nlohmann::json;

enum class Kind { Quiver, Pair, Cube, Braid, Arc, Matrices };
std::string_view to_string(Kind k) noexcept;

/// Decides the kind from the shape of the document; Parse error if none fits.
Kind detect_kind(const Json& j);

/// Parses text, turning syntax errors into Error(Parse) with the byte offset.
Json parse_json(std::string_view text);
/// Canonical dump: sorted keys, compact unless pretty.
std::string dump(const Json& j, bool pretty = false);

Json to_json(const Rat& x);
Json to_json(const RatMatrix& m);
Json to_json(const std::vector<RatMatrix>& ms);
Json to_json(const PervQuiver& q);
Json to_json(const BraidWord& w);
Json to_json(const ArcSpec& a);
Json to_json(const SymDiagram& d);
Json to_json(const DoubleCube& c);
Json to_json(const Violation& v);
Json to_json(const CubeViolation& v);
Json to_json(const QuiverMorphism& f);

Rat rat_from_json(const Json& j, const std::string& where = "");
RatMatrix matrix_from_json(const Json& j, const std::string& where = "");
std::vector<RatMatrix> matrices_from_json(const Json& j, const std::string& where = "");
PervQuiver quiver_from_json(const Json& j);
/// Words carry no strand count on the wire; the caller supplies n.
BraidWord word_from_json(const Json& j, std::size_t n);
ArcSpec arc_from_json(const Json& j, std::size_t n);
SymDiagram pair_from_json(const Json& j);
DoubleCube cube_from_json(const Json& j);

}  // namespace schober
