// JSON encodings of lattices, geometries, polytopes, quaternion groups and the
// octonion table. Every `*_to_json` output re-imports through the matching
// `*_from_json` and dumps back to the same bytes.
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "polyforge/algebras.hpp"
#include "polyforge/constructors.hpp"
#include "polyforge/lattice.hpp"
#include "polyforge/symmetry.hpp"

namespace polyforge {

using Json = nlohmann::json;

/// {"dimension": n, "ranks": [[[v, ...], ...], ...]} with ranks 0..n-1.
Json lattice_to_json(const FaceLattice& lattice);
FaceLattice lattice_from_json(const Json& j);

/// {"dimension": n, "field": "Q(sqrt5)", "vertices": [["a+b*sqrt5", ...], ...]}
Json geometry_to_json(const Geometry& geometry);
Geometry geometry_from_json(const Json& j);

/// {"name", "symbol", "fvector", "lattice", "geometry"?}
Json polytope_to_json(const NamedPolytope& polytope);
NamedPolytope polytope_from_json(const Json& j);

/// {"order": k, "elements": [[w, x, y, z], ...]} in canonical order.
Json group_to_json(const QuaternionGroup& group);
QuaternionGroup group_from_json(const Json& j);

/// 8x8 array of "+1", "-e4", ... indexed [i][j] = e_i e_j.
Json octonion_table_to_json(const OctonionTable& table);

/// "polygon(5)", "simplex(4)", "cell600", ...
PolytopeName parse_polytope_name(std::string_view text);

/// Compact single-line dump used for all emitted JSON.
std::string dump(const Json& j);

}  // namespace polyforge
