#include "polyforge/io.hpp"

#include <charconv>
#include <map>

namespace polyforge {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("JSON object lacks \"") + key + "\"");
  }
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Json point_to_json(std::span<const QuadExt> p) {
  Json row = Json::array();
  for (const auto& c : p) row.push_back(c.to_string());
  return row;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("coordinate row must be an array");
  Point p;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("coordinates must be strings");
    p.push_back(QuadExt::parse(c.get<std::string>()));
  }
  return p;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(); }

Json lattice_to_json(const FaceLattice& lattice) {
  Json ranks = Json::array();
  for (int k = 0; k < lattice.dimension(); ++k) ranks.push_back(lattice.faces(k));
  return Json{{"dimension", lattice.dimension()}, {"ranks", std::move(ranks)}};
}

FaceLattice lattice_from_json(const Json& j) {
  const int n = as_int(member(j, "dimension"), "dimension");
  const Json& ranks = member(j, "ranks");
  if (n < 0 || !ranks.is_array() || ranks.size() != static_cast<std::size_t>(n)) {
    throw ParseError("\"ranks\" must list ranks 0..dimension-1");
  }
  std::vector<std::vector<VertexSet>> proper;
  for (const auto& rank : ranks) {
    if (!rank.is_array()) throw ParseError("each rank must be an array of faces");
    std::vector<VertexSet> faces;
    for (const auto& face : rank) {
      if (!face.is_array()) throw ParseError("each face must be an array of vertex indices");
      VertexSet vs;
      for (const auto& v : face) {
        if (!v.is_number_unsigned()) throw ParseError("vertex indices must be non-negative integers");
        vs.push_back(v.get<VertexIndex>());
      }
      faces.push_back(std::move(vs));
    }
    proper.push_back(std::move(faces));
  }
  return FaceLattice::from_proper_faces(n, std::move(proper));
}

Json geometry_to_json(const Geometry& geometry) {
  Json vertices = Json::array();
  for (const auto& p : geometry.vertices) vertices.push_back(point_to_json(p));
  return Json{{"dimension", geometry.dimension},
              {"field", "Q(sqrt5)"},
              {"vertices", std::move(vertices)}};
}

Geometry geometry_from_json(const Json& j) {
  Geometry g;
  g.dimension = as_int(member(j, "dimension"), "dimension");
  const Json& field = member(j, "field");
  if (!field.is_string() || field.get<std::string>() != "Q(sqrt5)") {
    throw ParseError("geometry field must be \"Q(sqrt5)\"");
  }
  const Json& vertices = member(j, "vertices");
  if (!vertices.is_array()) throw ParseError("\"vertices\" must be an array");
  for (const auto& row : vertices) {
    Point p = point_from_json(row);
    if (p.size() != static_cast<std::size_t>(g.dimension)) {
      throw ParseError("vertex row length differs from dimension");
    }
    g.vertices.push_back(std::move(p));
  }
  return g;
}

Json polytope_to_json(const NamedPolytope& polytope) {
  Json j{{"name", polytope.name.to_string()},
         {"symbol", polytope.symbol.to_string()},
         {"fvector", f_vector(polytope.lattice).counts},
         {"lattice", lattice_to_json(polytope.lattice)}};
  if (polytope.geometry) j["geometry"] = geometry_to_json(*polytope.geometry);
  return j;
}

NamedPolytope polytope_from_json(const Json& j) {
  const Json& name = member(j, "name");
  const Json& symbol = member(j, "symbol");
  if (!name.is_string() || !symbol.is_string()) throw ParseError("name and symbol must be strings");
  NamedPolytope p;
  p.name = parse_polytope_name(name.get<std::string>());
  p.symbol = SchlafliSymbol::parse(symbol.get<std::string>());
  p.lattice = lattice_from_json(member(j, "lattice"));
  const Json& fv = member(j, "fvector");
  if (!fv.is_array() || fv.get<std::vector<std::uint64_t>>() != f_vector(p.lattice).counts) {
    throw ParseError("\"fvector\" disagrees with the lattice");
  }
  if (j.contains("geometry")) p.geometry = geometry_from_json(j.at("geometry"));
  return p;
}

Json group_to_json(const QuaternionGroup& group) {
  Json elements = Json::array();
  for (const auto& q : group.elements) elements.push_back(point_to_json(q.components()));
  return Json{{"order", group.order()}, {"elements", std::move(elements)}};
}

QuaternionGroup group_from_json(const Json& j) {
  const Json& elements = member(j, "elements");
  if (!elements.is_array()) throw ParseError("\"elements\" must be an array");
  QuaternionGroup g;
  for (const auto& row : elements) {
    Point p = point_from_json(row);
    if (p.size() != 4) throw ParseError("quaternions have 4 components");
    g.elements.push_back({p[0], p[1], p[2], p[3]});
  }
  std::sort(g.elements.begin(), g.elements.end(), numeric_less);
  const Json& order = member(j, "order");
  if (!order.is_number_unsigned() || order.get<std::size_t>() != g.elements.size()) {
    throw ParseError("\"order\" disagrees with the element count");
  }
  return g;
}

Json octonion_table_to_json(const OctonionTable& table) {
  Json rows = Json::array();
  for (int i = 0; i < 8; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 8; ++j) row.push_back(table.lookup(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

PolytopeName parse_polytope_name(std::string_view text) {
  static const std::map<std::string, std::pair<Family, int>, std::less<>> kFixedParameter = {
      {"segment", {Family::Segment, 1}},      {"icosahedron", {Family::Icosahedron, 3}},
      {"dodecahedron", {Family::Dodecahedron, 3}}, {"cell24", {Family::Cell24, 4}},
      {"cell600", {Family::Cell600, 4}},      {"cell120", {Family::Cell120, 4}},
  };
  static const std::map<std::string, Family, std::less<>> kParametric = {
      {"polygon", Family::Polygon},
      {"simplex", Family::Simplex},
      {"hypercube", Family::Hypercube},
      {"cross", Family::Cross},
  };
  if (auto it = kFixedParameter.find(text); it != kFixedParameter.end()) {
    return {it->second.first, it->second.second};
  }
  const auto open = text.find('(');
  if (open != std::string_view::npos && text.back() == ')') {
    const auto family = kParametric.find(text.substr(0, open));
    const std::string_view digits = text.substr(open + 1, text.size() - open - 2);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (family != kParametric.end() && ec == std::errc() && ptr == digits.data() + digits.size()) {
      return {family->second, value};
    }
  }
  throw ParseError("unknown polytope name '" + std::string(text) + "'");
}

}  // namespace polyforge
